#pragma once

#include <array>
#include <string>
#include <string_view>

namespace loadcomp
{

enum class Season
{
  Winter = 0,
  Summer = 1,
};

inline constexpr std::array<Season, 2> all_seasons{Season::Winter, Season::Summer};

/// Winter is October through February, summer March through September.
/// `month` is 1-based; throws InputError outside [1, 12].
Season season_of_month(int month);

/// Months belonging to a season, in calendar order.
std::array<bool, 12> months_in(Season season);

/// Mean calendar month length over the season's months (February 28.25 d).
double mean_calendar_month_days(Season season);

std::string_view to_string(Season season);

/// Case-insensitive "winter" / "summer".
Season parse_season(std::string_view text);

/// A value per season, indexable by Season.
template <typename T>
struct SeasonValues
{
  T winter{};
  T summer{};

  constexpr T& operator[](Season s) { return s == Season::Winter ? winter : summer; }
  constexpr const T& operator[](Season s) const { return s == Season::Winter ? winter : summer; }

  friend constexpr bool operator==(const SeasonValues&, const SeasonValues&) = default;
};

} // namespace loadcomp
