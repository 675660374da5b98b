#pragma once

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <optional>

#include "core/body.hpp"
#include "core/grid.hpp"
#include "core/metrics.hpp"

namespace polarlab {

/// Run-wide configuration: grid resolution, seed and tolerance model.
///
/// The grid tolerance follows the support-interpolation error model
///   tau_grid(A) = 5 * (pi / N) * clamp(nu(A), 1, 10);
/// interpolation error of a convex body of diameter d on an angular grid of
/// step theta is O(d * theta), and the factor 5 absorbs the amplification of
/// the radial recomputation. The scale is floored at 1 so degenerate bodies
/// ({0}, tiny balls) keep a usable tolerance, and capped at 10 to match the
/// truncation radius used when comparing unbounded bodies.
struct Config {
  int dimension = 2;
  int grid_n = 0;  // 0 = default: 1440 for n = 2, 2048 + 2n for n >= 3
  std::uint64_t seed = 42;
  std::optional<double> tau_override;  // absolute tau_grid override

  MetricConfig metric;
  double mean_tol = 1e-6;
  int mean_max_iter = 200;

  static constexpr double kScaleFloor = 1.0;
  static constexpr double kScaleCap = 10.0;

  GridPtr grid() const {
    if (!grid_cache_ || !(grid_cache_->dimension() == dimension && grid_cache_->size() == effective_n() &&
                          grid_cache_->seed() == seed))
      grid_cache_ = DirectionGrid::make(dimension, effective_n(), seed);
    return grid_cache_;
  }

  int effective_n() const {
    if (grid_n > 0) return grid_n;
    return dimension == 2 ? 1440 : 2048 + 2 * dimension;
  }

  double tau_for_scale(double scale) const {
    if (tau_override) return *tau_override;
    const double s = std::clamp(scale, kScaleFloor, kScaleCap);
    return 5.0 * (std::numbers::pi / effective_n()) * s;
  }

  double tau(const GridBody& a) const { return tau_for_scale(a.nu()); }

  double tau_pair(const GridBody& a, const GridBody& b) const {
    return tau_for_scale(std::max(std::min(a.nu(), kScaleCap), std::min(b.nu(), kScaleCap)));
  }

 private:
  mutable GridPtr grid_cache_;
};

}  // namespace polarlab
