#pragma once

#include <vector>

#include "core/polytope2.hpp"

namespace polarlab {

/// Finite point sample of a planar set, together with an enclosing radius.
struct PointCloud {
  std::vector<Point2> points;
  double bound = 0.0;
  /// Lattice pitch the cloud was generated with (0 for vertex samples).
  double spacing = 0.0;
};

/// All lattice points x with |x| <= bound and max_a <a, x> <= 1 over the
/// sample. Direct pointwise evaluation of the polar-set inequality.
PointCloud brute_polar(const PointCloud& sample, double lattice_step, double bound);

/// Exact two-sided max-min distance between the clouds.
double brute_hausdorff(const PointCloud& p, const PointCloud& q);

/// Scalar arithmetic-harmonic iteration from (r, s); converges to sqrt(r*s).
double scalar_ahm(double r, double s, double tol);

/// Boundary sample of a bounded polytope with approximately the given
/// spacing along the perimeter.
PointCloud boundary_cloud(const Polytope2& p, double spacing);

/// Solid lattice sample of a grid body (radial membership test).
PointCloud lattice_cloud(const GridBody& a, double lattice_step, double bound);

}  // namespace polarlab
