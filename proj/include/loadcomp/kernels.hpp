#pragma once

// Data-parallel inner loops shared by the profile, composition and
// reconcile modules. Every kernel has a plain serial twin in
// `kernels::serial`; tests hold the two against each other and the
// benchmarks in bench/ compare their throughput.

#include "loadcomp/catalog.hpp"
#include "loadcomp/season.hpp"

#include <cstddef>
#include <limits>
#include <span>

namespace loadcomp::kernels
{

/// Inputs shorter than this run serially even in the parallel kernels.
inline constexpr std::size_t parallel_threshold = 1 << 14;

/// Summation block. Sums are formed per block then combined in block
/// order, so results do not depend on the thread count.
inline constexpr std::size_t sum_block = 4096;

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Extrema
{
  double min = 0.0;
  double max = 0.0;
  std::size_t argmin = npos;  // earliest index on ties
  std::size_t argmax = npos;
};

double sum(std::span<const double> values);
Extrema extrema(std::span<const double> values);

/// out[i] = in[i] / divisor. Division (not reciprocal multiply) so the
/// element equal to `divisor` maps to exactly 1.
void divide(std::span<const double> in, double divisor, std::span<double> out);

/// Per-unit and household Wh/day for each spec.
void household_energy(std::span<const ApplianceSpec> specs, Season season,
                      std::span<double> per_unit_out, std::span<double> household_out);

/// Row-major `weights` (rows x cols). For each row r:
///   out[r, c] = measured[r] * weights[r, c] / sum_c weights[r, c]
/// Rows with measured[r] == 0 are all zero. Returns the first row with
/// measured power but zero weight sum (left zero-filled), or npos.
std::size_t proportional_split(std::span<const double> measured, std::span<const double> weights,
                               std::size_t cols, std::span<double> out);

namespace serial
{
double sum(std::span<const double> values);
Extrema extrema(std::span<const double> values);
void divide(std::span<const double> in, double divisor, std::span<double> out);
void household_energy(std::span<const ApplianceSpec> specs, Season season,
                      std::span<double> per_unit_out, std::span<double> household_out);
std::size_t proportional_split(std::span<const double> measured, std::span<const double> weights,
                               std::size_t cols, std::span<double> out);
} // namespace serial

} // namespace loadcomp::kernels
