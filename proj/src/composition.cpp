#include "loadcomp/composition.hpp"

#include "loadcomp/error.hpp"
#include "loadcomp/kernels.hpp"

#include <cmath>
#include <vector>

namespace loadcomp
{

double device_daily_energy(const ApplianceSpec& spec, Season season)
{
  return (spec.run_watts * spec.run_fraction + spec.idle_watts * spec.idle_fraction) *
         spec.tou[season];
}

double household_device_energy(const ApplianceSpec& spec, Season season)
{
  return static_cast<double>(spec.units[season]) * device_daily_energy(spec, season);
}

SeasonalConsumptionTable seasonal_table(const Catalog& catalog, Season season,
                                        double days_per_month)
{
  if (!(days_per_month >= 1.0) || !std::isfinite(days_per_month)) {
    throw InputError("days per month must be at least 1");
  }
  const auto specs = catalog.entries();
  std::vector<double> per_unit(specs.size());
  std::vector<double> household(specs.size());
  kernels::household_energy(specs, season, per_unit, household);

  SeasonalConsumptionTable table;
  table.season = season;
  table.days_per_month = days_per_month;
  table.rows.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    table.rows.push_back({specs[i].activity, season, per_unit[i], household[i]});
  }
  table.daily_total = kernels::sum(household);
  table.monthly_total = table.daily_total * days_per_month / 1000.0;
  return table;
}

double CompositionReport::share(std::string_view activity) const
{
  for (const auto& s : shares) {
    if (s.activity == activity) {
      return s.percent;
    }
  }
  throw InputError("no activity '" + std::string(activity) + "' in composition report");
}

CompositionReport composition_shares(const SeasonalConsumptionTable& table)
{
  if (!(table.daily_total > 0.0)) {
    throw InputError("empty composition basis");
  }
  CompositionReport report;
  report.season = table.season;
  report.basis_daily_total = table.daily_total;
  report.shares.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    report.shares.push_back({row.activity, 100.0 * row.household_daily / table.daily_total});
  }
  return report;
}

CompositionReport composition_shares(const Catalog& catalog, Season season)
{
  return composition_shares(seasonal_table(catalog, season));
}

SeasonPairReport season_pair_report(const Catalog& catalog)
{
  SeasonPairReport out{composition_shares(catalog, Season::Winter),
                       composition_shares(catalog, Season::Summer),
                       {}};
  for (std::size_t i = 0; i < out.winter.shares.size(); ++i) {
    out.deltas[out.winter.shares[i].activity] =
      out.summer.shares[i].percent - out.winter.shares[i].percent;
  }
  return out;
}

} // namespace loadcomp
