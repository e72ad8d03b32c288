#pragma once

#include "loadcomp/season.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loadcomp
{

/// Civil date-time at minute resolution, as read from ISO-8601 text.
struct Timestamp
{
  int year = 1970;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;

  friend constexpr auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

/// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM" and "YYYY-MM-DDTHH:MM:SS"
/// (a space may replace the T; seconds must be zero).
Timestamp parse_timestamp(std::string_view text);
std::string format_timestamp(const Timestamp& t);

enum class Granularity
{
  Hourly,
  MonthlyAverage,
  MonthlyPeak,
};

Granularity parse_granularity(std::string_view text);
std::string_view to_string(Granularity g);

struct Sample
{
  Timestamp time;
  double power_kw = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Measured power series. Non-empty, strictly increasing timestamps,
/// finite non-negative power.
class LoadProfile
{
public:
  LoadProfile(std::vector<Sample> samples, Granularity granularity, std::string label = {});

  const std::vector<Sample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  Granularity granularity() const { return granularity_; }
  const std::string& label() const { return label_; }

  std::vector<double> powers() const;

  /// Every power multiplied by k > 0.
  LoadProfile scaled(double k) const;

  friend bool operator==(const LoadProfile&, const LoadProfile&) = default;

private:
  std::vector<Sample> samples_;
  Granularity granularity_;
  std::string label_;
};

/// CSV with header `timestamp,power_kw`. Without an explicit granularity a
/// profile whose samples all sit at 00:00 on the first of distinct months is
/// taken as monthly-average, anything else as hourly.
LoadProfile parse_profile(std::string_view source, std::optional<Granularity> granularity = {},
                          std::string label = {});

std::string serialize_profile(const LoadProfile& profile);

struct NormalizedSample
{
  Timestamp time;
  double fraction = 0.0;
};

struct NormalizedProfile
{
  std::vector<NormalizedSample> samples;
  double peak_kw = 0.0;
  std::string label;
};

/// Each sample divided by the profile maximum. Throws InputError
/// ("zero peak") for an all-zero profile.
NormalizedProfile normalize(const LoadProfile& profile);

/// mean / max, in (0, 1].
double peak_average_ratio(const LoadProfile& profile);

/// 100 * (P(to) - P(from)) / P(from) on a monthly profile; months 1-based.
double monthly_growth(const LoadProfile& profile, int from_month, int to_month);

struct SeasonalSplit
{
  std::optional<LoadProfile> winter;
  std::optional<LoadProfile> summer;
};

SeasonalSplit seasonal_split(const LoadProfile& profile);

struct DailyExtrema
{
  int peak_hour = 0;
  int trough_hour = 0;
};

/// Hours of maximum and minimum power in a single hourly day. Ties go to
/// the earliest hour.
DailyExtrema daily_extrema(const LoadProfile& profile);

} // namespace loadcomp
