#include "loadcomp/profile.hpp"

#include "loadcomp/error.hpp"
#include "loadcomp/kernels.hpp"
#include "text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace loadcomp
{

namespace
{

bool leap(int y)
{
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in(int year, int month)
{
  static constexpr int d[12]{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return month == 2 && leap(year) ? 29 : d[month - 1];
}

bool digits(std::string_view s, std::size_t pos, std::size_t n, int& out)
{
  if (pos + n > s.size()) {
    return false;
  }
  auto first = s.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + n, out);
  return ec == std::errc{} && ptr == first + n;
}

std::string number_text(double v)
{
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void require_positive_peak(const kernels::Extrema& e)
{
  if (!(e.max > 0.0)) {
    throw InputError("zero peak");
  }
}

} // namespace

Timestamp parse_timestamp(std::string_view text)
{
  auto s = detail::trim(text);
  auto fail = [&]() -> Timestamp {
    throw InputError("bad timestamp '" + std::string(text) + "'");
  };
  Timestamp t;
  if (s.size() < 10 || s[4] != '-' || s[7] != '-' || !digits(s, 0, 4, t.year) ||
      !digits(s, 5, 2, t.month) || !digits(s, 8, 2, t.day)) {
    return fail();
  }
  if (s.size() > 10) {
    if ((s[10] != 'T' && s[10] != ' ') || s.size() < 16 || s[13] != ':' ||
        !digits(s, 11, 2, t.hour) || !digits(s, 14, 2, t.minute)) {
      return fail();
    }
    if (s.size() > 16) {
      int sec = 0;
      if (s.size() != 19 || s[16] != ':' || !digits(s, 17, 2, sec) || sec != 0) {
        return fail();
      }
    }
  }
  if (t.month < 1 || t.month > 12 || t.day < 1 || t.day > days_in(t.year, t.month) ||
      t.hour < 0 || t.hour > 23 || t.minute < 0 || t.minute > 59) {
    return fail();
  }
  return t;
}

std::string format_timestamp(const Timestamp& t)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d", t.year, t.month, t.day, t.hour,
                t.minute);
  return buf;
}

Granularity parse_granularity(std::string_view text)
{
  auto t = detail::lower(detail::trim(text));
  if (t == "hourly") {
    return Granularity::Hourly;
  }
  if (t == "monthly-average" || t == "monthly") {
    return Granularity::MonthlyAverage;
  }
  if (t == "monthly-peak") {
    return Granularity::MonthlyPeak;
  }
  throw InputError("unknown granularity '" + std::string(text) + "'");
}

std::string_view to_string(Granularity g)
{
  switch (g) {
    case Granularity::Hourly:
      return "hourly";
    case Granularity::MonthlyAverage:
      return "monthly-average";
    case Granularity::MonthlyPeak:
      return "monthly-peak";
  }
  return "hourly";
}

LoadProfile::LoadProfile(std::vector<Sample> samples, Granularity granularity, std::string label)
  : samples_(std::move(samples))
  , granularity_(granularity)
  , label_(std::move(label))
{
  if (samples_.empty()) {
    throw InputError("profile has no samples");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!std::isfinite(s.power_kw) || s.power_kw < 0.0) {
      throw InputError("sample " + std::to_string(i + 1) + " (" + format_timestamp(s.time) +
                       "): power must be finite and non-negative, got " +
                       number_text(s.power_kw));
    }
    if (i > 0 && !(samples_[i - 1].time < s.time)) {
      throw InputError("sample " + std::to_string(i + 1) + " (" + format_timestamp(s.time) +
                       "): timestamps must be strictly increasing");
    }
  }
}

std::vector<double> LoadProfile::powers() const
{
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) {
    out.push_back(s.power_kw);
  }
  return out;
}

LoadProfile LoadProfile::scaled(double k) const
{
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw InputError("scale factor must be positive");
  }
  auto copy = samples_;
  for (auto& s : copy) {
    s.power_kw *= k;
  }
  return LoadProfile(std::move(copy), granularity_, label_);
}

LoadProfile parse_profile(std::string_view source, std::optional<Granularity> granularity,
                          std::string label)
{
  auto records = detail::read_csv(source);
  if (records.empty()) {
    throw InputError("profile is empty");
  }
  const auto& header = records.front().fields;
  if (header.size() != 2 || detail::lower(header[0]) != "timestamp" ||
      detail::lower(header[1]) != "power_kw") {
    throw InputError("profile header must be 'timestamp,power_kw'");
  }
  if (records.size() == 1) {
    throw InputError("profile is empty");
  }

  std::vector<Sample> samples;
  samples.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    std::string where = "row " + std::to_string(r) + " (line " + std::to_string(rec.line) + ")";
    if (rec.fields.size() != 2) {
      throw InputError(where + ": expected 2 fields");
    }
    Sample s;
    try {
      s.time = parse_timestamp(rec.fields[0]);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    auto power = detail::to_double(rec.fields[1]);
    if (!power) {
      throw InputError(where + ": power_kw is not a number: '" + rec.fields[1] + "'");
    }
    if (*power < 0.0) {
      throw InputError(where + ": negative power " + rec.fields[1]);
    }
    if (!samples.empty() && !(samples.back().time < s.time)) {
      throw InputError(where + ": timestamps must be strictly increasing");
    }
    s.power_kw = *power;
    samples.push_back(s);
  }

  if (!granularity) {
    bool monthly = true;
    for (std::size_t i = 0; i < samples.size() && monthly; ++i) {
      const auto& t = samples[i].time;
      monthly = t.day == 1 && t.hour == 0 && t.minute == 0;
      if (monthly && i > 0) {
        const auto& p = samples[i - 1].time;
        monthly = !(p.year == t.year && p.month == t.month);
      }
    }
    granularity = monthly ? Granularity::MonthlyAverage : Granularity::Hourly;
  }
  return LoadProfile(std::move(samples), *granularity, std::move(label));
}

std::string serialize_profile(const LoadProfile& profile)
{
  std::ostringstream out;
  out << "timestamp,power_kw\n";
  for (const auto& s : profile.samples()) {
    out << format_timestamp(s.time) << ',' << number_text(s.power_kw) << '\n';
  }
  return out.str();
}

NormalizedProfile normalize(const LoadProfile& profile)
{
  const auto powers = profile.powers();
  const auto ext = kernels::extrema(powers);
  require_positive_peak(ext);

  std::vector<double> fractions(powers.size());
  kernels::divide(powers, ext.max, fractions);

  NormalizedProfile out;
  out.peak_kw = ext.max;
  out.label = profile.label();
  out.samples.reserve(powers.size());
  for (std::size_t i = 0; i < powers.size(); ++i) {
    out.samples.push_back({profile.samples()[i].time, fractions[i]});
  }
  return out;
}

double peak_average_ratio(const LoadProfile& profile)
{
  const auto powers = profile.powers();
  const auto ext = kernels::extrema(powers);
  require_positive_peak(ext);
  const double mean = kernels::sum(powers) / static_cast<double>(powers.size());
  // The mean cannot exceed the max; clamp the rounding excess.
  return std::min(1.0, mean / ext.max);
}

double monthly_growth(const LoadProfile& profile, int from_month, int to_month)
{
  if (profile.granularity() == Granularity::Hourly) {
    throw InputError("monthly growth needs a monthly profile");
  }
  std::map<int, double> by_month;
  for (const auto& s : profile.samples()) {
    if (!by_month.emplace(s.time.month, s.power_kw).second) {
      throw InputError("month " + std::to_string(s.time.month) + " appears more than once");
    }
  }
  auto value = [&](int month) {
    auto it = by_month.find(month);
    if (it == by_month.end()) {
      throw InputError("month " + std::to_string(month) + " missing from profile");
    }
    return it->second;
  };
  const double from = value(from_month);
  const double to = value(to_month);
  if (from == 0.0) {
    throw InputError("zero base");
  }
  return 100.0 * (to - from) / from;
}

SeasonalSplit seasonal_split(const LoadProfile& profile)
{
  std::vector<Sample> winter;
  std::vector<Sample> summer;
  for (const auto& s : profile.samples()) {
    (season_of_month(s.time.month) == Season::Winter ? winter : summer).push_back(s);
  }
  SeasonalSplit out;
  if (!winter.empty()) {
    out.winter.emplace(std::move(winter), profile.granularity(), profile.label());
  }
  if (!summer.empty()) {
    out.summer.emplace(std::move(summer), profile.granularity(), profile.label());
  }
  return out;
}

DailyExtrema daily_extrema(const LoadProfile& profile)
{
  if (profile.granularity() != Granularity::Hourly) {
    throw InputError("daily extrema need an hourly profile");
  }
  const auto& samples = profile.samples();
  const auto& first = samples.front().time;
  for (const auto& s : samples) {
    if (s.time.year != first.year || s.time.month != first.month || s.time.day != first.day) {
      throw InputError("daily extrema need a single-day profile");
    }
  }
  const auto ext = kernels::extrema(profile.powers());
  return {samples[ext.argmax].time.hour, samples[ext.argmin].time.hour};
}

} // namespace loadcomp
