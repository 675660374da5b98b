#include "core/linear_map.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <memory>

#include "core/errors.hpp"

namespace polarlab {

namespace {

Eigen::MatrixXd to_eigen(int n, const std::vector<double>& m) {
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m[static_cast<std::size_t>(i) * n + j];
  return out;
}

std::vector<double> from_eigen(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<double> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] = m(i, j);
  return out;
}

}  // namespace

LinearMap::LinearMap(int n, std::vector<double> entries) : n_(n), m_(std::move(entries)) {
  if (n_ < 1 || m_.size() != static_cast<std::size_t>(n_) * n_)
    throw Error(ErrorCode::kBadParameter, "matrix entries do not match dimension");

  Eigen::MatrixXd M = to_eigen(n_, m_);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  const double scale = M.cwiseAbs().maxCoeff();
  if (scale <= 0.0 || !lu.isInvertible() ||
      std::abs(lu.determinant()) < 1e-10 * std::pow(scale, n_))
    throw Error(ErrorCode::kSingularMap, "matrix is singular or near-singular");
  inv_ = from_eigen(lu.inverse());

  symmetric_ = (M - M.transpose()).cwiseAbs().maxCoeff() <= 1e-9 * scale;
  if (symmetric_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    // Descending eigenvalue order, eigenvector rows, sign-normalized.
    Eigen::MatrixXd u(n_, n_);
    eigenvalues_.resize(n_);
    for (int r = 0; r < n_; ++r) {
      const int src = n_ - 1 - r;
      eigenvalues_[r] = es.eigenvalues()(src);
      Eigen::VectorXd v = es.eigenvectors().col(src);
      for (int j = 0; j < n_; ++j) {
        if (std::abs(v(j)) > 1e-12) {
          if (v(j) < 0) v = -v;
          break;
        }
      }
      u.row(r) = v.transpose();
    }
    u_ = std::make_shared<const LinearMap>(n_, from_eigen(u));
    bool all_positive = true;
    for (double d : eigenvalues_) all_positive = all_positive && d > 0.0;
    classification_ =
        all_positive ? SpectralClass::kPositiveDefinite : SpectralClass::kIndefiniteOrNegative;
  }
}

LinearMap LinearMap::identity(int n) {
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1.0;
  return LinearMap(n, std::move(m));
}

LinearMap LinearMap::diagonal(const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = d[i];
  return LinearMap(n, std::move(m));
}

LinearMap LinearMap::rotation2(double radians) {
  const double c = std::cos(radians), s = std::sin(radians);
  return LinearMap(2, {c, -s, s, c});
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> m;
  m.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::kBadParameter, "matrix must be square");
    m.insert(m.end(), row.begin(), row.end());
  }
  return LinearMap(n, std::move(m));
}

LinearMap LinearMap::inverse() const { return LinearMap(n_, inv_); }

LinearMap LinearMap::transpose() const {
  std::vector<double> t(m_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      t[static_cast<std::size_t>(j) * n_ + i] = m_[static_cast<std::size_t>(i) * n_ + j];
  return LinearMap(n_, std::move(t));
}

LinearMap LinearMap::compose(const LinearMap& rhs) const {
  if (rhs.n_ != n_) throw Error(ErrorCode::kBadParameter, "dimension mismatch");
  return LinearMap(n_, from_eigen(to_eigen(n_, m_) * to_eigen(n_, rhs.m_)));
}

void LinearMap::apply(const double* x, double* y) const {
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += m_[static_cast<std::size_t>(i) * n_ + j] * x[j];
    y[i] = acc;
  }
}

void LinearMap::apply_transpose(const double* x, double* y) const {
  for (int j = 0; j < n_; ++j) {
    double acc = 0.0;
    for (int i = 0; i < n_; ++i) acc += m_[static_cast<std::size_t>(i) * n_ + j] * x[i];
    y[j] = acc;
  }
}

bool LinearMap::orthogonal(double tol) const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n_; ++k)
        acc += m_[static_cast<std::size_t>(k) * n_ + i] * m_[static_cast<std::size_t>(k) * n_ + j];
      if (std::abs(acc - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

const LinearMap& LinearMap::orthogonal_factor() const {
  if (!u_) throw Error(ErrorCode::kBadParameter, "matrix is not symmetric");
  return *u_;
}

}  // namespace polarlab
