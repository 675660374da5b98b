#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <vector>

#include "core/extended.hpp"
#include "core/grid.hpp"

namespace polarlab {

class LinearMap;

/// A closed convex set containing 0, sampled on a DirectionGrid.
///
/// The set is carried by its support samples h_i in [0, +inf]; the radial
/// samples rho_i are always the radial function of the outer polyhedron
/// cut out by the support constraints,
///   rho_i = min { h_k / <u_i, u_k> : <u_i, u_k> > 0, h_k finite },
/// with an empty minimum equal to +inf. The radial vector is derived lazily
/// from the support, so every value is canonical by construction and polar
/// is a pure swap-reciprocal.
///
/// Values are immutable; copies share storage and may cross threads freely.
class GridBody {
 public:
  GridBody() = default;

  /// Body from support samples; radial derived on demand.
  GridBody(GridPtr grid, std::vector<double> support);

  const DirectionGrid& grid() const { return *data_->grid; }
  GridPtr grid_ptr() const { return data_->grid; }
  int size() const { return static_cast<int>(data_->support.size()); }

  const std::vector<double>& support() const { return data_->support; }
  const std::vector<double>& radial() const;

  /// max_i rho_i; +inf for unbounded bodies.
  double nu() const;

  /// All support samples finite and all radial samples positive, i.e. the
  /// body is compact with 0 interior at grid resolution.
  bool bounded() const;
  bool has_interior() const;

  bool valid() const { return static_cast<bool>(data_); }

  // -- factories ------------------------------------------------------------
  static GridBody ball(GridPtr grid, double r);
  static GridBody origin(GridPtr grid);
  static GridBody whole_space(GridPtr grid);
  static GridBody segment(GridPtr grid, const std::vector<double>& to);
  /// n = 2 only: { x : h(u) = sqrt(a^2 u1^2 + b^2 u2^2) }, the image of the
  /// unit ball under diag(a, b).
  static GridBody ellipse(GridPtr grid, double a, double b);

 private:
  struct Data {
    GridPtr grid;
    std::vector<double> support;
    mutable std::vector<double> radial;
    mutable std::once_flag radial_once;
    mutable std::atomic<double> nu_cache{-1.0};
  };

  friend GridBody scale(const GridBody&, double);
  static GridBody with_radial(GridPtr grid, std::vector<double> support,
                              std::vector<double> radial);

  std::shared_ptr<const Data> data_;
};

/// Radial samples of the outer polyhedron of the given support samples.
std::vector<double> canonical_radial(const DirectionGrid& grid, const std::vector<double>& support);

/// Support samples of the body spanned by radial boundary points
/// rho_k * u_k (recession directions propagate +inf).
std::vector<double> support_from_radial(const DirectionGrid& grid, const std::vector<double>& radial);

/// Support value h_A(w) for an arbitrary (not necessarily unit) vector w.
/// n = 2: angular linear interpolation between the straddling grid samples,
/// with exact hits snapped. n >= 3: nearest grid direction.
double eval_support(const GridBody& a, const double* w);

// -- operations ---------------------------------------------------------

GridBody polar(const GridBody& a);
GridBody minkowski_sum(const GridBody& a, const GridBody& b);
GridBody intersect(const GridBody& a, const GridBody& b);
GridBody hull_union(const GridBody& a, const GridBody& b);
GridBody scale(const GridBody& a, double r);
GridBody truncate(const GridBody& a, double r);
GridBody linear_image(const LinearMap& t, const GridBody& a);
GridBody canonicalize(const GridBody& a);
double nu(const GridBody& a);

void require_same_grid(const GridBody& a, const GridBody& b);

}  // namespace polarlab
