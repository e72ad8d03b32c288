#pragma once

// Rendering of tables, reports and series to CSV / JSON text. Stored
// values stay at full precision; rendering optionally rounds half-up.

#include "loadcomp/composition.hpp"
#include "loadcomp/profile.hpp"
#include "loadcomp/reconcile.hpp"
#include "loadcomp/synth.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace loadcomp
{

/// Round half toward +infinity at `decimals` places, tolerant of binary
/// representation error (2213.7000000000003 -> 2213.7).
double round_half_up(double value, int decimals);

/// Shortest round-trip decimal text for a double.
std::string format_number(double value);

struct RenderOptions
{
  bool full_precision = false;
  int energy_decimals = 1;   // Wh/day
  int monthly_decimals = 2;  // kWh/month
  int share_decimals = 1;    // percent
};

struct SeasonOutput
{
  SeasonalConsumptionTable table;
  CompositionReport report;
};

std::string composition_csv(const std::vector<SeasonOutput>& seasons, const RenderOptions& opt);
nlohmann::ordered_json composition_json(const std::vector<SeasonOutput>& seasons,
                                        const std::optional<SeasonPairReport>& pair,
                                        const RenderOptions& opt);

/// Array of {label, percent} for a pie chart.
nlohmann::ordered_json pie_json(const CompositionReport& report, const RenderOptions& opt);

std::string synth_csv(const HouseholdDay& day);
nlohmann::ordered_json synth_json(const HouseholdDay& day);

/// `hour,activity,kw`
std::string attribution_csv(const HourlyAttribution& attribution);
nlohmann::ordered_json reconciliation_json(const ReconciliationResult& result,
                                           const CompositionReport& attributed,
                                           const RenderOptions& opt);

} // namespace loadcomp
