#pragma once

#include "loadcomp/catalog.hpp"
#include "loadcomp/composition.hpp"
#include "loadcomp/profile.hpp"
#include "loadcomp/synth.hpp"

#include <string>
#include <vector>

namespace loadcomp
{

/// Relative gap above which a reconciliation is flagged as suspect.
inline constexpr double gap_warning_threshold = 0.25;

struct ReconciliationResult
{
  double scale_factor = 1.0;          // measured / bottom-up
  double measured_energy = 0.0;       // kWh/month
  double bottom_up_energy = 0.0;      // kWh/month
  double relative_gap = 0.0;          // |1 - bottom_up / measured|
  SeasonalConsumptionTable adjusted_table;

  bool gap_warning() const { return relative_gap > gap_warning_threshold; }
};

/// Scales every row of `table` so its monthly total equals
/// `measured_energy_kwh`.
ReconciliationResult scale_to_measured(const SeasonalConsumptionTable& table,
                                       double measured_energy_kwh);

/// Measured energy of a profile expressed per month: the sum of hourly kW
/// readings (kWh for the day) times `days_per_month`.
double monthly_energy_from_day(const LoadProfile& day, double days_per_month);

struct HourlyAttribution
{
  Season season = Season::Winter;
  std::vector<std::string> activities;
  std::vector<int> hours;                 // hour of day of each measured sample
  std::vector<std::vector<double>> kw;    // [sample][activity]
  LoadProfile measured;

  double total(std::size_t sample) const;
};

/// Splits each measured hour over activities in proportion to the
/// synthesised bottom-up energy in that hour. Throws InputError for a
/// non-hourly or multi-day profile, and ("unattributable load") when an
/// hour carries measured power but no bottom-up energy.
HourlyAttribution disaggregate(const LoadProfile& measured, const Catalog& catalog, Season season,
                               const OccupancyCurve& occupancy);

CompositionReport composition_from_attribution(const HourlyAttribution& attribution);

} // namespace loadcomp
