#include "core/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/mean.hpp"
#include "core/metrics.hpp"

namespace polarlab {

namespace {

void require_unit_interval(double t) {
  if (!(t >= 0.0) || t > 1.0) throw Error(ErrorCode::kBadParameter, "t must lie in [0, 1]");
}

}  // namespace

GridBody F_cap(const GridBody& k, double t) {
  require_unit_interval(t);
  if (t == 0.0) return k;
  if (t == 1.0) return GridBody::origin(k.grid_ptr());
  return truncate(k, (1.0 - t) / t);
}

GridBody H_add(const GridBody& k, double t) {
  require_unit_interval(t);
  if (t == 0.0) return k;
  return minkowski_sum(k, GridBody::ball(k.grid_ptr(), t));
}

GridBody h_dense(const GridBody& a, double t) {
  require_unit_interval(t);
  if (t == 0.0) return a;
  return H_add(F_cap(a, t), t);
}

GridBody psi(const GridBody& a, double t) {
  require_unit_interval(t);
  if (t == 0.0) return a;
  return F_cap(H_add(a, t), t);
}

GridBody kappa(const GridBody& a, double t) {
  if (!(t > 0.0) || !(t < 1.0)) throw Error(ErrorCode::kBadParameter, "t must lie in (0, 1)");
  const DirectionGrid& g = a.grid();
  const auto& rho = a.radial();
  const int n = g.size();

  // Direction-wise the union of segments [0, a/(1+t|a|)] has radial value
  // rho/(1+t rho), with limit 1/t on recession directions; the convex hull
  // is recovered as the support of the sampled boundary points.
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) {
    const double v = is_inf(rho[i]) ? 1.0 / t : rho[i] / (1.0 + t * rho[i]);
    r[i] = std::max(t, v);
  }
  return GridBody(a.grid_ptr(), support_from_radial(g, r));
}

GridBody phi(const GridBody& a, double t, double tol, int max_iter) {
  require_unit_interval(t);
  if (t == 0.0) return a;
  if (t == 1.0) return GridBody::ball(a.grid_ptr(), 1.0);
  const GridBody lhs = psi(a, t);
  const GridBody rhs = polar(psi(polar(a), t));
  return geometric_mean(lhs, rhs, tol, max_iter).final;
}

Report claim1_check(const GridBody& a, double t, const Config& cfg) {
  if (!(t > 0.0) || !(t < 0.5)) throw Error(ErrorCode::kBadParameter, "t must lie in (0, 1/2)");
  Report r;
  r.scenario = "claim1";
  r.echo_config(cfg);
  const GridBody image = phi(a, t, cfg.mean_tol, cfg.mean_max_iter);
  const double slack = t / (1.0 - t);
  double worst = -kInf;
  for (int i = 0; i < a.size(); ++i) {
    const double bound = a.support()[i] + slack;  // inf absorbs
    if (is_inf(bound)) continue;
    worst = std::max(worst, image.support()[i] - bound);
  }
  if (is_inf(worst)) worst = 0.0;  // every direction unbounded
  std::ostringstream d;
  d << "t=" << t;
  r.add("claim1.outer_bound", "contracted body stays within the dilated original",
        std::max(worst, 0.0), cfg.tau(a), d.str());
  return r;
}

double claim2_eta(double eps) {
  const int j = threshold_index(eps);
  const double bound =
      std::min(std::min(0.5, eps / (eps + 1.0)), std::min(1.0 / (j + 1), eps / (j * j)));
  return 0.99 * bound;  // keeps t strictly inside the open bound
}

Report claim2_check(const GridBody& a, double eps, int samples, const Config& cfg) {
  if (samples < 1) throw Error(ErrorCode::kBadParameter, "samples must be >= 1");
  Report r;
  r.scenario = "claim2";
  r.echo_config(cfg);
  const double eta = claim2_eta(eps);
  double worst = 0.0;
  double worst_t = 0.0;
  for (int s = 1; s <= samples; ++s) {
    const double t = eta * s / (samples + 1);
    const double d = attouch_wets(phi(a, t, cfg.mean_tol, cfg.mean_max_iter), a, cfg.metric);
    if (d > worst) {
      worst = d;
      worst_t = t;
    }
  }
  std::ostringstream d;
  d << "eps=" << eps << " eta=" << eta << " worst_t=" << worst_t;
  const double tol_aw = 20.0 * cfg.tau(a);
  r.add("claim2.near_identity", "small parameters keep the contraction near the identity", worst,
        eps + tol_aw, d.str());
  return r;
}

}  // namespace polarlab
