#include "core/grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace polarlab {

namespace {

// Uniform double in [0,1) from the top 53 bits; keeps the sequence
// independent of the standard library's distribution implementations.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller pair; only the first value is used per call site below.
double next_gaussian(std::mt19937_64& rng) {
  double u1 = next_unit(rng);
  double u2 = next_unit(rng);
  while (u1 <= 1e-300) u1 = next_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::shared_ptr<const DirectionGrid> DirectionGrid::make(int dimension, int count,
                                                         std::uint64_t seed) {
  if (dimension < 2) throw std::invalid_argument("grid dimension must be >= 2");
  if (count < kMinDirections) throw std::invalid_argument("grid needs at least 8 directions");

  auto grid = std::shared_ptr<DirectionGrid>(new DirectionGrid());
  grid->dimension_ = dimension;
  grid->count_ = count;
  grid->seed_ = seed;
  grid->coords_.resize(static_cast<std::size_t>(count) * dimension);

  if (dimension == 2) {
    grid->angle_step_ = 2.0 * std::numbers::pi / count;
    grid->cos_table_.resize(count);
    for (int k = 0; k < count; ++k) {
      const double theta = grid->angle_step_ * k;
      double c = std::cos(theta);
      double s = std::sin(theta);
      if (std::abs(c) < kAngleTol) c = 0.0;
      if (std::abs(s) < kAngleTol) s = 0.0;
      if (c == 0.0 || s == 0.0) {  // axis direction: renormalize exactly
        c = (c == 0.0) ? 0.0 : (c > 0 ? 1.0 : -1.0);
        s = (s == 0.0) ? 0.0 : (s > 0 ? 1.0 : -1.0);
      }
      grid->coords_[2 * k] = c;
      grid->coords_[2 * k + 1] = s;
      double cd = std::cos(grid->angle_step_ * k);
      grid->cos_table_[k] = (std::abs(cd) < kAngleTol) ? 0.0 : cd;
    }
    int w = 0;
    while (w + 1 < count && grid->cos_table_[w + 1] > 0.0) ++w;
    grid->positive_window_ = w;
  } else {
    // +-e_i first, then seeded quasi-uniform unit vectors.
    if (count < 2 * dimension) throw std::invalid_argument("grid too small for +-e_i set");
    std::size_t at = 0;
    for (int i = 0; i < dimension; ++i) {
      for (int s = 0; s < 2; ++s) {
        for (int j = 0; j < dimension; ++j)
          grid->coords_[at * dimension + j] = (j == i) ? (s == 0 ? 1.0 : -1.0) : 0.0;
        ++at;
      }
    }
    std::mt19937_64 rng(seed);
    while (at < static_cast<std::size_t>(count)) {
      double norm2 = 0.0;
      std::vector<double> v(dimension);
      for (int j = 0; j < dimension; ++j) {
        v[j] = next_gaussian(rng);
        norm2 += v[j] * v[j];
      }
      if (norm2 < 1e-12) continue;
      const double inv = 1.0 / std::sqrt(norm2);
      for (int j = 0; j < dimension; ++j) grid->coords_[at * dimension + j] = v[j] * inv;
      ++at;
    }
  }
  return grid;
}

double DirectionGrid::dot(int i, const double* v) const {
  const double* u = direction(i);
  double acc = 0.0;
  for (int j = 0; j < dimension_; ++j) acc += u[j] * v[j];
  return acc;
}

int DirectionGrid::nearest_index(const double* v) const {
  int best = 0;
  double best_dot = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < count_; ++i) {
    const double d = dot(i, v);
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return best;
}

}  // namespace polarlab
