#include "loadcomp/reconcile.hpp"

#include "loadcomp/error.hpp"
#include "loadcomp/kernels.hpp"

#include <cmath>

namespace loadcomp
{

ReconciliationResult scale_to_measured(const SeasonalConsumptionTable& table,
                                       double measured_energy_kwh)
{
  if (!(table.monthly_total > 0.0)) {
    throw InputError("zero bottom-up total");
  }
  if (!(measured_energy_kwh > 0.0) || !std::isfinite(measured_energy_kwh)) {
    throw InputError("zero measured energy");
  }

  ReconciliationResult out;
  out.measured_energy = measured_energy_kwh;
  out.bottom_up_energy = table.monthly_total;
  out.scale_factor = measured_energy_kwh / table.monthly_total;
  out.relative_gap = std::abs(1.0 - table.monthly_total / measured_energy_kwh);

  out.adjusted_table = table;
  auto& adj = out.adjusted_table;
  for (auto& row : adj.rows) {
    row.per_unit_daily *= out.scale_factor;
    row.household_daily *= out.scale_factor;
  }
  adj.daily_total = table.daily_total * out.scale_factor;
  adj.monthly_total = adj.daily_total * adj.days_per_month / 1000.0;
  return out;
}

double monthly_energy_from_day(const LoadProfile& day, double days_per_month)
{
  if (day.granularity() != Granularity::Hourly) {
    throw InputError("measured energy needs an hourly profile");
  }
  return kernels::sum(day.powers()) * days_per_month;
}

double HourlyAttribution::total(std::size_t sample) const
{
  double t = 0.0;
  for (double v : kw.at(sample)) {
    t += v;
  }
  return t;
}

HourlyAttribution disaggregate(const LoadProfile& measured, const Catalog& catalog, Season season,
                               const OccupancyCurve& occupancy)
{
  if (measured.granularity() != Granularity::Hourly) {
    throw InputError("granularity mismatch: disaggregation needs an hourly profile");
  }
  const auto& samples = measured.samples();
  const auto& first = samples.front().time;
  for (const auto& s : samples) {
    if (s.time.year != first.year || s.time.month != first.month || s.time.day != first.day) {
      throw InputError("disaggregation needs a single-day profile");
    }
  }

  const auto day = synth_household_day(catalog, season, occupancy);
  const std::size_t rows = samples.size();
  const std::size_t cols = day.activities.size();

  std::vector<double> weights(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto hour = static_cast<std::size_t>(samples[r].time.hour);
    for (std::size_t c = 0; c < cols; ++c) {
      weights[r * cols + c] = day.activities[c].wh[hour];
    }
  }
  const auto powers = measured.powers();
  std::vector<double> split(rows * cols);
  const auto bad = kernels::proportional_split(powers, weights, cols, split);
  if (bad != kernels::npos) {
    throw InputError("unattributable load at hour " + std::to_string(samples[bad].time.hour) +
                     ": measured " + std::to_string(powers[bad]) +
                     " kW but no bottom-up energy in that hour");
  }

  HourlyAttribution out{season, {}, {}, {}, measured};
  for (const auto& a : day.activities) {
    out.activities.push_back(a.activity);
  }
  out.hours.reserve(rows);
  out.kw.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    out.hours.push_back(samples[r].time.hour);
    out.kw.emplace_back(split.begin() + static_cast<std::ptrdiff_t>(r * cols),
                        split.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
  }
  return out;
}

CompositionReport composition_from_attribution(const HourlyAttribution& attribution)
{
  std::vector<double> energy(attribution.activities.size(), 0.0);
  for (const auto& row : attribution.kw) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      energy[c] += row[c];
    }
  }
  const double total = kernels::serial::sum(energy);
  if (!(total > 0.0)) {
    throw InputError("zero total attributed energy");
  }
  CompositionReport report;
  report.season = attribution.season;
  report.basis_daily_total = total * 1000.0;  // kWh over the day -> Wh/day
  for (std::size_t c = 0; c < energy.size(); ++c) {
    report.shares.push_back({attribution.activities[c], 100.0 * energy[c] / total});
  }
  return report;
}

} // namespace loadcomp
