#pragma once

#include <vector>

#include "core/body.hpp"
#include "core/config.hpp"
#include "core/report.hpp"

namespace polarlab {

class LinearMap;

/// Iteration record of the interleaved arithmetic / polar-harmonic mean.
struct MeanTrace {
  struct Step {
    int m;
    double gap;  // d_H(A_m, H_m)
  };
  std::vector<Step> iterates;
  GridBody final;
  bool converged = false;
  int iterations = 0;
};

/// Geometric mean of two compact bodies with 0 interior: the common limit of
///   A_{m+1} = (A_m + H_m) / 2,
///   H_{m+1} = ((A_m^polar + H_m^polar) / 2)^polar.
/// Stops when d_H(A_m, H_m) <= tol (the gap is a two-sided bracket since
/// H_m is contained in A_m) or after max_iter steps, in which case the trace
/// is returned with converged = false. The outer iterate A_m is the result.
MeanTrace geometric_mean(const GridBody& a, const GridBody& k, double tol, int max_iter = 200);

/// Symmetry, polar-exchange, self-polar, monotonicity and linear-equivariance
/// checks of the mean, each to 10 * tau_grid.
Report gamma_suite(const GridBody& a, const GridBody& k, const LinearMap& t, const Config& cfg);

}  // namespace polarlab
