#pragma once

#include <utility>
#include <vector>

#include "core/body.hpp"

namespace polarlab {

struct MetricConfig {
  int j_max = 64;      // cap for the truncation sweep
  double tol = 1e-12;  // equality short-circuit
};

struct SweepTerm {
  int j;
  double term;  // min(1/j, d_H of the j-truncations)
};

/// Sup-norm gap of the support samples: +inf when the unbounded direction
/// sets differ, with inf - inf on a shared unbounded direction treated as 0.
double hausdorff(const GridBody& a, const GridBody& b);

/// Hausdorff distance between the j-ball truncations; always finite.
double hausdorff_truncated(const GridBody& a, const GridBody& b, double j);

/// Attouch-Wets distance via the truncation sweep
/// sup_j min(1/j, d_H(A cap jB, K cap jB)); result lies in [0, 1].
double attouch_wets(const GridBody& a, const GridBody& b, const MetricConfig& cfg = {});

double attouch_wets(const GridBody& a, const GridBody& b, const MetricConfig& cfg,
                    std::vector<SweepTerm>* sweep);

/// Threshold index j with 1/(j+1) < eps <= 1/j.
int threshold_index(double eps);

/// (d_AW < eps, d_H at the threshold truncation < eps); the pair must agree.
std::pair<bool, bool> aw_threshold_check(const GridBody& a, const GridBody& b, double eps,
                                         const MetricConfig& cfg = {});

/// Hausdorff distance of the r-truncations; the default cap matches the
/// largest body scale the grid tolerance model distinguishes.
double hausdorff_on_truncations(const GridBody& a, const GridBody& b, double r = 10.0);

}  // namespace polarlab
