#include "loadcomp/kernels.hpp"

#include "loadcomp/error.hpp"

#include <omp.h>

#include <cassert>
#include <vector>

namespace loadcomp::kernels
{

namespace
{

inline void energy_of(const ApplianceSpec& s, Season season, double& per_unit, double& household)
{
  per_unit = (s.run_watts * s.run_fraction + s.idle_watts * s.idle_fraction) * s.tou[season];
  household = static_cast<double>(s.units[season]) * per_unit;
}

inline double row_weight_sum(const double* row, std::size_t cols)
{
  double w = 0.0;
  for (std::size_t c = 0; c < cols; ++c) {
    w += row[c];
  }
  return w;
}

// Returns false when the row carries power but no weight.
inline bool split_row(double measured, const double* w, std::size_t cols, double* out)
{
  double total = row_weight_sum(w, cols);
  if (measured == 0.0) {
    for (std::size_t c = 0; c < cols; ++c) {
      out[c] = 0.0;
    }
    return true;
  }
  if (!(total > 0.0)) {
    for (std::size_t c = 0; c < cols; ++c) {
      out[c] = 0.0;
    }
    return false;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    out[c] = measured * w[c] / total;
  }
  return true;
}

} // namespace

double sum(std::span<const double> values)
{
  const std::size_t n = values.size();
  if (n < parallel_threshold) {
    return serial::sum(values);
  }
  const std::size_t blocks = (n + sum_block - 1) / sum_block;
  std::vector<double> partial(blocks, 0.0);
  const double* data = values.data();

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * sum_block;
    const std::size_t hi = std::min(lo + sum_block, n);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      acc += data[i];
    }
    partial[b] = acc;
  }

  double total = 0.0;
  for (double p : partial) {
    total += p;
  }
  return total;
}

Extrema extrema(std::span<const double> values)
{
  const std::size_t n = values.size();
  if (n < parallel_threshold) {
    return serial::extrema(values);
  }
  const int threads = omp_get_max_threads();
  std::vector<Extrema> local(static_cast<std::size_t>(threads));
  const double* data = values.data();

#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const std::size_t lo = n * static_cast<std::size_t>(t) / static_cast<std::size_t>(nt);
    const std::size_t hi = n * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(nt);
    local[t] = serial::extrema(std::span<const double>(data + lo, hi - lo));
    if (local[t].argmin != npos) {
      local[t].argmin += lo;
      local[t].argmax += lo;
    }
  }

  // Chunks are contiguous and in index order, so strict comparisons keep
  // the earliest index on ties.
  Extrema out;
  for (const auto& e : local) {
    if (e.argmin == npos) {
      continue;
    }
    if (out.argmin == npos) {
      out = e;
      continue;
    }
    if (e.min < out.min) {
      out.min = e.min;
      out.argmin = e.argmin;
    }
    if (e.max > out.max) {
      out.max = e.max;
      out.argmax = e.argmax;
    }
  }
  return out;
}

void divide(std::span<const double> in, double divisor, std::span<double> out)
{
  assert(in.size() == out.size());
  if (in.size() < parallel_threshold) {
    serial::divide(in, divisor, out);
    return;
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(in.size());
  const double* src = in.data();
  double* dst = out.data();
#pragma omp parallel for simd schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    dst[i] = src[i] / divisor;
  }
}

void household_energy(std::span<const ApplianceSpec> specs, Season season,
                      std::span<double> per_unit_out, std::span<double> household_out)
{
  assert(specs.size() == per_unit_out.size() && specs.size() == household_out.size());
  if (specs.size() < parallel_threshold) {
    serial::household_energy(specs, season, per_unit_out, household_out);
    return;
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    energy_of(specs[i], season, per_unit_out[i], household_out[i]);
  }
}

std::size_t proportional_split(std::span<const double> measured, std::span<const double> weights,
                               std::size_t cols, std::span<double> out)
{
  const std::size_t rows = measured.size();
  assert(weights.size() == rows * cols && out.size() == rows * cols);
  if (rows * cols < parallel_threshold) {
    return serial::proportional_split(measured, weights, cols, out);
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows);
  std::size_t first_bad = npos;

#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    const auto row = static_cast<std::size_t>(r);
    if (!split_row(measured[row], weights.data() + row * cols, cols, out.data() + row * cols)) {
      first_bad = std::min(first_bad, row);
    }
  }
  return first_bad;
}

namespace serial
{

double sum(std::span<const double> values)
{
  double total = 0.0;
  for (double v : values) {
    total += v;
  }
  return total;
}

Extrema extrema(std::span<const double> values)
{
  Extrema out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (out.argmin == npos) {
      out = {v, v, i, i};
      continue;
    }
    if (v < out.min) {
      out.min = v;
      out.argmin = i;
    }
    if (v > out.max) {
      out.max = v;
      out.argmax = i;
    }
  }
  return out;
}

void divide(std::span<const double> in, double divisor, std::span<double> out)
{
  assert(in.size() == out.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = in[i] / divisor;
  }
}

void household_energy(std::span<const ApplianceSpec> specs, Season season,
                      std::span<double> per_unit_out, std::span<double> household_out)
{
  assert(specs.size() == per_unit_out.size() && specs.size() == household_out.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    energy_of(specs[i], season, per_unit_out[i], household_out[i]);
  }
}

std::size_t proportional_split(std::span<const double> measured, std::span<const double> weights,
                               std::size_t cols, std::span<double> out)
{
  assert(weights.size() == measured.size() * cols && out.size() == measured.size() * cols);
  std::size_t first_bad = npos;
  for (std::size_t r = 0; r < measured.size(); ++r) {
    if (!split_row(measured[r], weights.data() + r * cols, cols, out.data() + r * cols) &&
        first_bad == npos) {
      first_bad = r;
    }
  }
  return first_bad;
}

} // namespace serial

} // namespace loadcomp::kernels
