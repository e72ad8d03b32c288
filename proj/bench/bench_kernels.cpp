// Serial reference vs OpenMP kernels on inputs sized like real workloads:
// multi-year hourly feeder series and large batches of appliance specs.

#include "loadcomp/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace
{

namespace k = loadcomp::kernels;

std::vector<double> series(std::size_t n)
{
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> d(0.0, 1e4);
  std::vector<double> v(n);
  for (auto& x : v) {
    x = d(rng);
  }
  return v;
}

std::vector<loadcomp::ApplianceSpec> specs(std::size_t n)
{
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<loadcomp::ApplianceSpec> out(n);
  for (auto& s : out) {
    s.activity = "a";
    s.tou = {24 * u(rng), 24 * u(rng)};
    s.units = {static_cast<long>(10 * u(rng)), static_cast<long>(10 * u(rng))};
    s.run_watts = 3000 * u(rng);
    s.idle_watts = s.run_watts * u(rng);
    s.run_fraction = u(rng);
    s.idle_fraction = 1 - s.run_fraction;
  }
  return out;
}

template <double (*Fn)(std::span<const double>)>
void BM_Sum(benchmark::State& state)
{
  auto v = series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(v));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <k::Extrema (*Fn)(std::span<const double>)>
void BM_Extrema(benchmark::State& state)
{
  auto v = series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(v));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <void (*Fn)(std::span<const double>, double, std::span<double>)>
void BM_Divide(benchmark::State& state)
{
  auto v = series(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(v.size());
  for (auto _ : state) {
    Fn(v, 9876.5, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <void (*Fn)(std::span<const loadcomp::ApplianceSpec>, loadcomp::Season, std::span<double>,
                     std::span<double>)>
void BM_HouseholdEnergy(benchmark::State& state)
{
  auto s = specs(static_cast<std::size_t>(state.range(0)));
  std::vector<double> pu(s.size()), hh(s.size());
  for (auto _ : state) {
    Fn(s, loadcomp::Season::Summer, pu, hh);
    benchmark::DoNotOptimize(hh.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <std::size_t (*Fn)(std::span<const double>, std::span<const double>, std::size_t,
                            std::span<double>)>
void BM_ProportionalSplit(benchmark::State& state)
{
  constexpr std::size_t cols = 15;
  const auto rows = static_cast<std::size_t>(state.range(0));
  auto measured = series(rows);
  auto weights = series(rows * cols);
  std::vector<double> out(rows * cols);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(measured, weights, cols, out));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// One year of hourly data up to ten years of quarter-hourly data.
constexpr long year_hours = 8760;

} // namespace

BENCHMARK(BM_Sum<k::serial::sum>)->Name("sum/serial")->Arg(year_hours)->Arg(year_hours * 40);
BENCHMARK(BM_Sum<k::sum>)->Name("sum/omp")->Arg(year_hours)->Arg(year_hours * 40);
BENCHMARK(BM_Extrema<k::serial::extrema>)->Name("extrema/serial")->Arg(year_hours)->Arg(year_hours * 40);
BENCHMARK(BM_Extrema<k::extrema>)->Name("extrema/omp")->Arg(year_hours)->Arg(year_hours * 40);
BENCHMARK(BM_Divide<k::serial::divide>)->Name("divide/serial")->Arg(year_hours)->Arg(year_hours * 40);
BENCHMARK(BM_Divide<k::divide>)->Name("divide/omp")->Arg(year_hours)->Arg(year_hours * 40);
BENCHMARK(BM_HouseholdEnergy<k::serial::household_energy>)->Name("household_energy/serial")->Arg(15)->Arg(1 << 20);
BENCHMARK(BM_HouseholdEnergy<k::household_energy>)->Name("household_energy/omp")->Arg(15)->Arg(1 << 20);
BENCHMARK(BM_ProportionalSplit<k::serial::proportional_split>)->Name("proportional_split/serial")->Arg(24)->Arg(year_hours * 10);
BENCHMARK(BM_ProportionalSplit<k::proportional_split>)->Name("proportional_split/omp")->Arg(24)->Arg(year_hours * 10);

BENCHMARK_MAIN();
