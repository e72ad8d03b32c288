#include "loadcomp/synth.hpp"

#include "loadcomp/composition.hpp"
#include "loadcomp/error.hpp"
#include "text.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace loadcomp
{

namespace
{

HourlyValues normalized(const HourlyValues& w)
{
  double total = 0.0;
  for (double v : w) {
    total += v;
  }
  HourlyValues out{};
  for (std::size_t h = 0; h < hours_per_day; ++h) {
    out[h] = w[h] / total;
  }
  return out;
}

} // namespace

OccupancyCurve OccupancyCurve::from_weights(std::span<const double> weights)
{
  if (weights.size() != hours_per_day) {
    throw InputError("occupancy curve needs 24 values, got " + std::to_string(weights.size()));
  }
  HourlyValues w{};
  double total = 0.0;
  for (std::size_t h = 0; h < hours_per_day; ++h) {
    if (!std::isfinite(weights[h]) || weights[h] < 0.0) {
      throw InputError("occupancy weight for hour " + std::to_string(h) +
                       " must be finite and non-negative");
    }
    w[h] = weights[h];
    total += w[h];
  }
  if (!(total > 0.0)) {
    throw InputError("occupancy curve is all zero");
  }
  return OccupancyCurve(normalized(w));
}

OccupancyCurve OccupancyCurve::default_curve()
{
  // Quiet overnight, trough at 06:00, climbing through the school/work
  // return to a 15:00 peak, tapering through the evening.
  static constexpr HourlyValues raw{
    30, 26, 22, 19, 16, 13, 10, 18, 27, 34, 41, 49,  // 00-11
    58, 66, 74, 80, 72, 65, 60, 56, 52, 47, 41, 35,  // 12-23
  };
  return from_weights(raw);
}

OccupancyCurve OccupancyCurve::uniform()
{
  HourlyValues w;
  w.fill(1.0);
  return from_weights(w);
}

OccupancyCurve parse_occupancy(std::string_view source)
{
  std::vector<double> values;
  std::string token;
  auto flush = [&] {
    auto t = detail::trim(token);
    if (!t.empty()) {
      auto v = detail::to_double(t);
      if (!v) {
        throw InputError("occupancy: not a number: '" + std::string(t) + "'");
      }
      values.push_back(*v);
    }
    token.clear();
  };
  for (char c : source) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return OccupancyCurve::from_weights(values);
}

HourlyShape shape_for(const ApplianceSpec& spec, Season season, const OccupancyCurve& occupancy)
{
  HourlyShape shape;
  shape.activity = spec.activity;
  shape.season = season;
  const auto& occ = occupancy.weights();
  constexpr double flat = 1.0 / static_cast<double>(hours_per_day);
  switch (spec.operation) {
    case OperationClass::Auto:
      shape.weights.fill(flat);
      break;
    case OperationClass::Manual:
      shape.weights = occ;
      break;
    case OperationClass::SemiAuto: {
      HourlyValues mix{};
      for (std::size_t h = 0; h < hours_per_day; ++h) {
        mix[h] = 0.5 * (flat + occ[h]);
      }
      shape.weights = normalized(mix);
      break;
    }
  }
  return shape;
}

double HouseholdDay::grand_total_wh() const
{
  double total = 0.0;
  for (double v : total_wh) {
    total += v;
  }
  return total;
}

HouseholdDay synth_household_day(const Catalog& catalog, Season season,
                                 const OccupancyCurve& occupancy)
{
  HouseholdDay day;
  day.season = season;
  day.activities.reserve(catalog.size());
  for (const auto& spec : catalog.entries()) {
    const double energy = household_device_energy(spec, season);
    const auto shape = shape_for(spec, season, occupancy);
    ActivitySeries series{spec.activity, {}};
    for (std::size_t h = 0; h < hours_per_day; ++h) {
      series.wh[h] = energy * shape.weights[h];
      day.total_wh[h] += series.wh[h];
    }
    day.activities.push_back(std::move(series));
  }
  return day;
}

} // namespace loadcomp
