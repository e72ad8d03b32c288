#include "loadcomp/season.hpp"

#include "loadcomp/error.hpp"
#include "text.hpp"

#include <string>

namespace loadcomp
{

Season season_of_month(int month)
{
  if (month < 1 || month > 12) {
    throw InputError("month out of range: " + std::to_string(month));
  }
  return (month >= 3 && month <= 9) ? Season::Summer : Season::Winter;
}

std::array<bool, 12> months_in(Season season)
{
  std::array<bool, 12> out{};
  for (int m = 1; m <= 12; ++m) {
    out[m - 1] = season_of_month(m) == season;
  }
  return out;
}

double mean_calendar_month_days(Season season)
{
  constexpr std::array<double, 12> days{31, 28.25, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  double total = 0.0;
  int count = 0;
  auto in = months_in(season);
  for (int m = 0; m < 12; ++m) {
    if (in[m]) {
      total += days[m];
      ++count;
    }
  }
  return total / count;
}

std::string_view to_string(Season season)
{
  return season == Season::Winter ? "winter" : "summer";
}

Season parse_season(std::string_view text)
{
  auto t = detail::lower(detail::trim(text));
  if (t == "winter") {
    return Season::Winter;
  }
  if (t == "summer") {
    return Season::Summer;
  }
  throw InputError("unknown season '" + std::string(text) + "'");
}

} // namespace loadcomp
