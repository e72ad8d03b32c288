#pragma once

#include "loadcomp/catalog.hpp"
#include "loadcomp/season.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loadcomp
{

inline constexpr std::size_t hours_per_day = 24;
using HourlyValues = std::array<double, hours_per_day>;

/// Hour-of-day distribution of occupant-driven activity. Always normalised
/// to sum 1.
class OccupancyCurve
{
public:
  /// Normalises `weights`. Throws InputError on a negative or non-finite
  /// weight or an all-zero curve.
  static OccupancyCurve from_weights(std::span<const double> weights);

  /// Residential default: lowest at 06:00, highest at 15:00.
  static OccupancyCurve default_curve();
  static OccupancyCurve uniform();

  const HourlyValues& weights() const { return weights_; }

private:
  explicit OccupancyCurve(const HourlyValues& w) : weights_(w) {}
  HourlyValues weights_{};
};

/// 24 comma- or whitespace-separated non-negative numbers.
OccupancyCurve parse_occupancy(std::string_view source);

struct HourlyShape
{
  std::string activity;
  Season season = Season::Winter;
  HourlyValues weights{};
};

/// Auto: uniform. Manual: the occupancy curve. SemiAuto: mean of the two,
/// renormalised.
HourlyShape shape_for(const ApplianceSpec& spec, Season season, const OccupancyCurve& occupancy);

struct ActivitySeries
{
  std::string activity;
  HourlyValues wh{};  // energy in each hour, Wh
};

struct HouseholdDay
{
  Season season = Season::Winter;
  std::vector<ActivitySeries> activities;  // catalog order
  HourlyValues total_wh{};

  double grand_total_wh() const;
};

HouseholdDay synth_household_day(const Catalog& catalog, Season season,
                                 const OccupancyCurve& occupancy);

} // namespace loadcomp
