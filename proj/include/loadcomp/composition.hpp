#pragma once

#include "loadcomp/catalog.hpp"
#include "loadcomp/season.hpp"

#include <map>
#include <string>
#include <vector>

namespace loadcomp
{

/// Days per month used for monthly totals unless the caller says otherwise.
inline constexpr double default_days_per_month = 30.0;

/// Per-unit daily energy in Wh/day.
double device_daily_energy(const ApplianceSpec& spec, Season season);

/// units * device_daily_energy, Wh/day.
double household_device_energy(const ApplianceSpec& spec, Season season);

struct DeviceEnergy
{
  std::string activity;
  Season season = Season::Winter;
  double per_unit_daily = 0.0;   // Wh/day
  double household_daily = 0.0;  // Wh/day
};

struct SeasonalConsumptionTable
{
  Season season = Season::Winter;
  std::vector<DeviceEnergy> rows;
  double daily_total = 0.0;    // Wh/day
  double monthly_total = 0.0;  // kWh/month
  double days_per_month = default_days_per_month;
};

/// One row per catalog activity in catalog order. `days_per_month` must be
/// at least 1; it is a real number so calendar-mean month lengths work.
SeasonalConsumptionTable seasonal_table(const Catalog& catalog, Season season,
                                        double days_per_month = default_days_per_month);

struct Share
{
  std::string activity;
  double percent = 0.0;
};

struct CompositionReport
{
  Season season = Season::Winter;
  std::vector<Share> shares;  // catalog order
  double basis_daily_total = 0.0;

  /// Throws InputError for an unknown activity.
  double share(std::string_view activity) const;
};

/// Percentages of household daily energy. Throws InputError
/// ("empty composition basis") when the daily total is zero.
CompositionReport composition_shares(const SeasonalConsumptionTable& table);
CompositionReport composition_shares(const Catalog& catalog, Season season);

struct SeasonPairReport
{
  CompositionReport winter;
  CompositionReport summer;
  /// summer share - winter share, percentage points.
  std::map<std::string, double> deltas;
};

SeasonPairReport season_pair_report(const Catalog& catalog);

} // namespace loadcomp
