#pragma once

#include <memory>
#include <vector>

#include "core/body.hpp"
#include "core/config.hpp"
#include "core/linear_map.hpp"
#include "core/report.hpp"

namespace polarlab {

/// Decreasing involution f(A) = T(A^polar) for a symmetric invertible T,
/// together with the spectral factors used by its classification:
/// T = U^T D U, S = sqrt(|D|), W = S^{-1} D S^{-1} (diagonal +-1), and for
/// positive-definite T also R = sqrt(D) and Psi = U^T R.
class SymmetricDuality {
 public:
  explicit SymmetricDuality(const LinearMap& t);

  const LinearMap& map() const { return t_; }
  SpectralClass classification() const { return t_.classification(); }
  bool positive_definite() const {
    return t_.classification() == SpectralClass::kPositiveDefinite;
  }

  const LinearMap& orthogonal_factor() const { return t_.orthogonal_factor(); }
  const std::vector<double>& eigenvalues() const { return t_.eigenvalues(); }

  LinearMap sqrt_abs_diag() const;  // S
  LinearMap sign_diag() const;      // W
  /// Psi = U^T sqrt(D); only for positive-definite T.
  LinearMap conjugator() const;
  /// First index (1-based) with a negative eigenvalue; only when indefinite.
  int negative_index() const;

 private:
  LinearMap t_;
};

/// f(A) = T(A^polar).
GridBody dual_map(const SymmetricDuality& d, const GridBody& a);

/// Same value along the adjoint route [(T^T)^{-1} A]^polar.
GridBody dual_map_adjoint(const SymmetricDuality& d, const GridBody& a);

/// Positive-definite T: f agrees with Psi polar Psi^{-1} on the sample.
Report conjugation_check(const SymmetricDuality& d, const GridBody& a, const Config& cfg);

/// The round cone { a : a_j >= sqrt(sum_{i != j} a_i^2) } as a grid body.
GridBody cone_body(int j, const Config& cfg);

/// The t-member Y_t of the fixed-point family of Theorem-2 type for an
/// indefinite symmetric T, with its two certificates attached.
struct FixedPointResult {
  GridBody body;              // Y_t
  GridBody symmetric_core;    // P_t with P_t^polar = W(P_t)
  double residual_polar_w;    // d_H(P_t^polar, W P_t)
  double residual_fixed;      // d_H(f(Y_t), Y_t)
  double tol_fix;
  bool certified() const { return residual_polar_w <= tol_fix && residual_fixed <= tol_fix; }
};

FixedPointResult fixpoint_family(const SymmetricDuality& d, double t, double tol,
                                 const Config& cfg);

/// Residual of U(A^polar) vs (U A)^polar over the corpus, plus d_H(U B, B);
/// passes iff U is orthogonal and the residual stays within tolerance.
Report polar_preserving_check(const LinearMap& u, const std::vector<GridBody>& corpus,
                              const Config& cfg);

}  // namespace polarlab
