#pragma once

// Seeded random inputs for property tests.

#include "loadcomp/catalog.hpp"
#include "loadcomp/profile.hpp"

#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace gen
{

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline long integer(Rng& rng, long lo, long hi)
{
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline loadcomp::ApplianceSpec spec(Rng& rng, std::string name)
{
  loadcomp::ApplianceSpec s;
  s.activity = std::move(name);
  s.tou = {uniform(rng, 0, 24), uniform(rng, 0, 24)};
  s.units = {integer(rng, 0, 12), integer(rng, 0, 12)};
  s.run_watts = uniform(rng, 0, 3000);
  s.idle_watts = uniform(rng, 0, s.run_watts);
  s.run_fraction = uniform(rng, 0, 1);
  s.idle_fraction = 1.0 - s.run_fraction;
  s.operation = static_cast<loadcomp::OperationClass>(integer(rng, 0, 2));
  return s;
}

/// 1..max_size activities; the first always draws energy in both seasons.
inline loadcomp::Catalog catalog(Rng& rng, std::size_t max_size = 20)
{
  const auto n = static_cast<std::size_t>(integer(rng, 1, static_cast<long>(max_size)));
  std::vector<loadcomp::ApplianceSpec> specs;
  for (std::size_t i = 0; i < n; ++i) {
    specs.push_back(spec(rng, "activity " + std::to_string(i)));
  }
  auto& first = specs.front();
  first.tou = {uniform(rng, 0.5, 24), uniform(rng, 0.5, 24)};
  first.units = {integer(rng, 1, 12), integer(rng, 1, 12)};
  first.run_watts = uniform(rng, 10, 3000);
  first.idle_watts = uniform(rng, 0, first.run_watts);
  first.run_fraction = uniform(rng, 0.1, 1);
  first.idle_fraction = 1.0 - first.run_fraction;
  return loadcomp::Catalog(std::move(specs));
}

inline loadcomp::Timestamp hour_of(int year, int month, int day, int hour)
{
  return {year, month, day, hour, 0};
}

/// One hourly day of random power; roughly one hour in eight is zero.
inline loadcomp::LoadProfile day(Rng& rng, int month = 6)
{
  std::vector<loadcomp::Sample> samples;
  bool any = false;
  for (int h = 0; h < 24; ++h) {
    double p = integer(rng, 0, 7) == 0 ? 0.0 : uniform(rng, 0.01, 50.0);
    any = any || p > 0.0;
    samples.push_back({hour_of(2016, month, 1, h), p});
  }
  if (!any) {
    samples[15].power_kw = 1.0;
  }
  return loadcomp::LoadProfile(std::move(samples), loadcomp::Granularity::Hourly, "random");
}

/// Random-length hourly series spanning several days.
inline loadcomp::LoadProfile series(Rng& rng, std::size_t max_len = 500)
{
  const auto n = static_cast<std::size_t>(integer(rng, 1, static_cast<long>(max_len)));
  std::vector<loadcomp::Sample> samples;
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    const int day = static_cast<int>(i / 24) % 28 + 1;
    const int month = static_cast<int>(i / (24 * 28)) % 12 + 1;
    const int year = 2016 + static_cast<int>(i / (24 * 28 * 12));
    double p = integer(rng, 0, 10) == 0 ? 0.0 : uniform(rng, 0.0, 1e4);
    any = any || p > 0.0;
    samples.push_back({hour_of(year, month, day, static_cast<int>(i % 24)), p});
  }
  if (!any) {
    samples.front().power_kw = 3.0;
  }
  return loadcomp::LoadProfile(std::move(samples), loadcomp::Granularity::Hourly, "random");
}

} // namespace gen
