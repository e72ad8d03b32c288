#pragma once

// Frozen reference values for the built-in survey catalog: published
// per-activity Wh/day (winter, summer) and monthly totals (kWh).

#include <array>
#include <string_view>

namespace survey
{

struct Published
{
  std::string_view activity;
  double winter_wh;
  double summer_wh;
};

inline constexpr std::array<Published, 15> household_wh{{
  {"Heating (oil-filled)", 12000, 1125},
  {"Air conditioning", 6720, 56000},
  {"Water heating", 19782, 2213.7},
  {"Water coolers", 1300, 2210},
  {"Water pump", 375, 525},
  {"Washing & Drying", 5200, 7600},
  {"Ironing", 1000, 1800},
  {"Vacuum cleaning", 1000, 1300},
  {"Cooking", 3440, 3010},
  {"Electric kettle", 2340, 3600},
  {"Lighting", 3650, 3750},
  {"Food preservation", 4800, 4800},
  {"TV", 636, 1416},
  {"PC", 630, 780},
  {"Gaming devices", 312, 360},
}};

inline constexpr double winter_monthly_kwh = 1895.55;
inline constexpr double summer_monthly_kwh = 2714.69;

// Column sums of the published table, added by hand.
inline constexpr double winter_daily_wh = 63185.0;
inline constexpr double summer_daily_wh = 90489.7;

} // namespace survey
