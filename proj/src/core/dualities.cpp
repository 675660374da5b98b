#include "core/dualities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/contraction.hpp"
#include "core/errors.hpp"
#include "core/mean.hpp"
#include "core/metrics.hpp"

namespace polarlab {

SymmetricDuality::SymmetricDuality(const LinearMap& t) : t_(t) {
  if (!t_.symmetric()) throw Error(ErrorCode::kBadParameter, "duality map must be symmetric");
}

LinearMap SymmetricDuality::sqrt_abs_diag() const {
  std::vector<double> s(eigenvalues().size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(std::abs(eigenvalues()[i]));
  return LinearMap::diagonal(s);
}

LinearMap SymmetricDuality::sign_diag() const {
  std::vector<double> w(eigenvalues().size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = eigenvalues()[i] < 0 ? -1.0 : 1.0;
  return LinearMap::diagonal(w);
}

LinearMap SymmetricDuality::conjugator() const {
  if (!positive_definite())
    throw Error(ErrorCode::kNotPositiveDefinite, "conjugator requires a positive-definite map");
  std::vector<double> r(eigenvalues().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::sqrt(eigenvalues()[i]);
  return orthogonal_factor().transpose().compose(LinearMap::diagonal(r));
}

int SymmetricDuality::negative_index() const {
  for (std::size_t i = 0; i < eigenvalues().size(); ++i)
    if (eigenvalues()[i] < 0) return static_cast<int>(i) + 1;
  throw Error(ErrorCode::kPositiveDefinite, "map has no negative eigenvalue");
}

GridBody dual_map(const SymmetricDuality& d, const GridBody& a) {
  return linear_image(d.map(), polar(a));
}

GridBody dual_map_adjoint(const SymmetricDuality& d, const GridBody& a) {
  return polar(linear_image(d.map().transpose().inverse(), a));
}

Report conjugation_check(const SymmetricDuality& d, const GridBody& a, const Config& cfg) {
  Report r;
  r.scenario = "conjugation";
  r.echo_config(cfg);
  const LinearMap psi_map = d.conjugator();
  const GridBody via_conjugation = linear_image(psi_map, polar(linear_image(psi_map.inverse(), a)));
  const double residual = hausdorff_on_truncations(dual_map(d, a), via_conjugation);
  r.add("duality.conjugation", "duality acts as the polar map conjugated by its square root",
        residual, 20.0 * cfg.tau(a));
  return r;
}

GridBody cone_body(int j, const Config& cfg) {
  const int n = cfg.dimension;
  if (j < 1 || j > n) throw Error(ErrorCode::kBadIndex, "cone axis out of range");
  GridPtr grid = cfg.grid();
  const int count = grid->size();
  std::vector<double> h(count);
  for (int i = 0; i < count; ++i) {
    // h = 0 on the polar cone { u : u_j <= -|u_offaxis| }, +inf elsewhere.
    const double* u = grid->direction(i);
    double off2 = 0.0;
    for (int c = 0; c < n; ++c)
      if (c != j - 1) off2 += u[c] * u[c];
    const double margin = -u[j - 1] - std::sqrt(off2);
    h[i] = margin >= -DirectionGrid::kAngleTol ? 0.0 : kInf;
  }
  return GridBody(std::move(grid), std::move(h));
}

FixedPointResult fixpoint_family(const SymmetricDuality& d, double t, double tol,
                                 const Config& cfg) {
  if (d.positive_definite())
    throw Error(ErrorCode::kPositiveDefinite,
                "positive-definite dualities have a single fixed point; no family exists");
  if (!(t > 0.0) || !(t < 1.0)) throw Error(ErrorCode::kBadParameter, "t must lie in (0, 1)");

  // Everything below lives in the eigenbasis of T, where D is diagonal and
  // W is its sign pattern; U^T S maps the result back.
  const int j = d.negative_index();
  const GridBody cone = cone_body(j, cfg);
  const GridBody e_t = psi(cone, t);
  const GridBody k_t = polar(psi(polar(cone), t));
  const GridBody p_t = geometric_mean(e_t, k_t, tol, cfg.mean_max_iter).final;

  FixedPointResult out;
  out.symmetric_core = p_t;
  out.body = linear_image(d.orthogonal_factor().transpose().compose(d.sqrt_abs_diag()), p_t);
  out.residual_polar_w = hausdorff(polar(p_t), linear_image(d.sign_diag(), p_t));
  out.residual_fixed = hausdorff(dual_map(d, out.body), out.body);
  out.tol_fix = 50.0 * cfg.tau(p_t) + 10.0 * tol;
  return out;
}

Report polar_preserving_check(const LinearMap& u, const std::vector<GridBody>& corpus,
                              const Config& cfg) {
  Report r;
  r.scenario = "polar_preserving";
  r.echo_config(cfg);
  if (corpus.empty()) throw Error(ErrorCode::kBadParameter, "corpus must be nonempty");

  double residual = 0.0;
  double tol = 0.0;
  for (const auto& a : corpus) {
    residual = std::max(residual,
                        hausdorff_on_truncations(linear_image(u, polar(a)), polar(linear_image(u, a))));
    tol = std::max(tol, 20.0 * cfg.tau(a));
  }
  const GridBody ball = GridBody::ball(corpus.front().grid_ptr(), 1.0);
  const double ball_gap = hausdorff(linear_image(u, ball), ball);
  std::ostringstream detail;
  detail << "d_H(U ball, ball) = " << ball_gap;

  if (u.orthogonal()) {
    r.add("duality.polar_preserving", "orthogonal images commute with the polar map", residual,
          tol, detail.str());
  } else {
    r.add_flag("duality.polar_preserving",
               "non-orthogonal image detected as not polar preserving",
               residual > tol || ball_gap > tol, detail.str());
  }
  return r;
}

}  // namespace polarlab
