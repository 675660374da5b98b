#include "core/mean.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/linear_map.hpp"
#include "core/metrics.hpp"

namespace polarlab {

namespace {

void require_mean_admissible(const GridBody& a, const char* which) {
  if (!a.bounded() || !a.has_interior())
    throw Error(ErrorCode::kNotInteriorBody,
                std::string(which) + " operand must be compact with 0 interior");
}

/// max_i (h_a[i] - h_b[i])_+ ignoring directions where either side is inf.
double support_excess(const GridBody& a, const GridBody& b) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const double ha = a.support()[i], hb = b.support()[i];
    if (is_inf(ha) || is_inf(hb)) continue;
    worst = std::max(worst, ha - hb);
  }
  return worst;
}

}  // namespace

MeanTrace geometric_mean(const GridBody& a, const GridBody& k, double tol, int max_iter) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kBadParameter, "mean tolerance must be > 0");
  if (max_iter < 1) throw Error(ErrorCode::kBadParameter, "max_iter must be >= 1");
  require_mean_admissible(a, "first");
  require_mean_admissible(k, "second");

  MeanTrace trace;
  GridBody am = a, hm = k;
  for (int m = 0;; ++m) {
    const double gap = hausdorff(am, hm);
    trace.iterates.push_back({m, gap});
    trace.iterations = m;
    if (gap <= tol) {
      trace.converged = true;
      break;
    }
    if (m == max_iter) break;
    GridBody next_a = scale(minkowski_sum(am, hm), 0.5);
    GridBody next_h = polar(scale(minkowski_sum(polar(am), polar(hm)), 0.5));
    am = std::move(next_a);
    hm = std::move(next_h);
  }
  trace.final = am;
  return trace;
}

Report gamma_suite(const GridBody& a, const GridBody& k, const LinearMap& t, const Config& cfg) {
  Report r;
  r.scenario = "gamma_suite";
  r.echo_config(cfg);
  const double tol_gamma = 10.0 * cfg.tau_pair(a, k);
  const double tol = cfg.mean_tol;
  const int iters = cfg.mean_max_iter;

  const GridBody g_ak = geometric_mean(a, k, tol, iters).final;
  const GridBody g_ka = geometric_mean(k, a, tol, iters).final;
  r.add("gamma.symmetry", "mean is symmetric in its arguments", hausdorff(g_ak, g_ka), tol_gamma);

  const GridBody g_polars = geometric_mean(polar(a), polar(k), tol, iters).final;
  r.add("gamma.polar_exchange", "mean of polars equals polar of mean",
        hausdorff(g_polars, polar(g_ak)), tol_gamma);

  const GridBody g_self = geometric_mean(a, polar(a), tol, iters).final;
  r.add("gamma.self_polar", "mean with own polar is the unit ball",
        hausdorff(g_self, GridBody::ball(a.grid_ptr(), 1.0)), tol_gamma + tol);

  // Nested quadruple: shrunk operands stay inside the mean of the originals.
  const GridBody a1 = scale(a, 0.7), k1 = scale(k, 0.9);
  const GridBody g_inner = geometric_mean(a1, k1, tol, iters).final;
  r.add("gamma.monotone", "mean preserves inclusion of nested operands",
        support_excess(g_inner, g_ak), cfg.tau_pair(a, k));

  const GridBody g_images = geometric_mean(linear_image(t, a), linear_image(t, k), tol, iters).final;
  r.add("gamma.linear_equivariance", "mean commutes with invertible linear images",
        hausdorff(g_images, linear_image(t, g_ak)), tol_gamma);
  return r;
}

}  // namespace polarlab
