#pragma once

#include <memory>
#include <vector>

namespace polarlab {

enum class SpectralClass { kPositiveDefinite, kIndefiniteOrNegative, kNotSymmetric };

/// Invertible n x n real matrix with cached inverse, transpose and (when the
/// matrix is symmetric) a sorted eigendecomposition T = U^T D U.
///
/// Rows of U are the eigenvectors, eigenvalues sorted descending; each
/// eigenvector's first nonzero component is positive so the factorization is
/// reproducible across runs.
class LinearMap {
 public:
  /// Row-major entries, size n*n. Throws SingularMap when not invertible.
  LinearMap(int n, std::vector<double> entries);

  static LinearMap identity(int n);
  static LinearMap diagonal(const std::vector<double>& d);
  static LinearMap rotation2(double radians);
  static LinearMap from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return n_; }
  double at(int i, int j) const { return m_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const { return m_; }

  LinearMap inverse() const;
  LinearMap transpose() const;
  LinearMap compose(const LinearMap& rhs) const;  // (*this) * rhs

  /// y = M x (y and x may not alias).
  void apply(const double* x, double* y) const;
  void apply_transpose(const double* x, double* y) const;

  bool symmetric() const { return symmetric_; }
  bool orthogonal(double tol = 1e-9) const;
  SpectralClass classification() const { return classification_; }

  /// Eigenvalues (descending) and the orthogonal factor U with eigenvector
  /// rows; only meaningful when symmetric().
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const LinearMap& orthogonal_factor() const;

 private:
  int n_;
  std::vector<double> m_;
  std::vector<double> inv_;
  bool symmetric_ = false;
  SpectralClass classification_ = SpectralClass::kNotSymmetric;
  std::vector<double> eigenvalues_;
  std::shared_ptr<const LinearMap> u_;
};

}  // namespace polarlab
