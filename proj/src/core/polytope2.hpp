#pragma once

#include <array>
#include <vector>

#include "core/body.hpp"

namespace polarlab {

using Point2 = std::array<double, 2>;

/// Exact planar convex polyhedron containing 0: cch(vertices) + cone(rays).
///
/// Vertices are kept in counterclockwise strict convex position; rays are
/// unit recession directions for unbounded polyhedra. The degenerate case
/// {0} is a single vertex with no rays.
class Polytope2 {
 public:
  /// Canonicalizes the input: convex hull, CCW order, collinear vertices
  /// dropped. Throws InvalidBody when 0 is not contained.
  explicit Polytope2(std::vector<Point2> vertices, std::vector<Point2> rays = {});

  static Polytope2 square(double half_side = 1.0);
  static Polytope2 cross_polytope(double r = 1.0);
  /// Cone { x : x_j >= |x_other| } at the origin, j in {1, 2}.
  static Polytope2 cone(int j);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Point2>& rays() const { return rays_; }
  bool is_bounded() const { return rays_.empty(); }
  bool is_cone_at_origin() const;

  bool contains(const Point2& p, double tol = 1e-9) const;
  bool interior_contains_origin(double tol = 1e-12) const;

  double support(const Point2& u) const;

  /// Exact polar. Requires 0 in the interior (bounded polar) or a cone at
  /// the origin (polar cone); throws NotInterior otherwise.
  Polytope2 polar() const;

  Polytope2 linear_image(const class LinearMap& t) const;

  /// Support samples on the grid.
  GridBody to_grid_body(GridPtr grid) const;

  /// Exact Hausdorff distance between bounded polytopes.
  static double hausdorff_exact(const Polytope2& p, const Polytope2& q);

 private:
  std::vector<Point2> vertices_;
  std::vector<Point2> rays_;
};

}  // namespace polarlab
