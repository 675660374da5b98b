#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace polarlab {

double hausdorff(const GridBody& a, const GridBody& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const double ha = a.support()[i], hb = b.support()[i];
    if (is_inf(ha) && is_inf(hb)) continue;
    if (is_inf(ha) || is_inf(hb)) return kInf;
    m = std::max(m, std::abs(ha - hb));
  }
  return m;
}

namespace {

// Support samples of A cap jB: the truncation's radial is the entrywise
// minimum of the radials, so the tight support comes straight from it.
std::vector<double> truncated_support(const GridBody& a, double j) {
  const auto& rho = a.radial();
  std::vector<double> r(rho.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(rho[i], j);
  return support_from_radial(a.grid(), r);
}

double sup_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_inf(a[i]) && is_inf(b[i])) continue;
    if (is_inf(a[i]) || is_inf(b[i])) return kInf;
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace

double hausdorff_truncated(const GridBody& a, const GridBody& b, double j) {
  require_same_grid(a, b);
  return sup_gap(truncated_support(a, j), truncated_support(b, j));
}

double attouch_wets(const GridBody& a, const GridBody& b, const MetricConfig& cfg) {
  return attouch_wets(a, b, cfg, nullptr);
}

double attouch_wets(const GridBody& a, const GridBody& b, const MetricConfig& cfg,
                    std::vector<SweepTerm>* sweep) {
  // Truncations stop changing once j clears both bodies.
  const double saturation = std::max(a.nu(), b.nu());
  double saturated_gap = -1.0;
  double best = 0.0;
  for (int j = 1; j <= cfg.j_max; ++j) {
    // Later terms are capped by 1/j, so once 1/j falls under the running
    // supremum the sweep is finished. A zero supremum runs to j_max.
    if (best > cfg.tol && 1.0 / j <= best + cfg.tol) break;
    double gap;
    if (j >= saturation && saturated_gap >= 0.0) {
      gap = saturated_gap;
    } else {
      gap = hausdorff_truncated(a, b, j);
      if (j >= saturation) saturated_gap = gap;
    }
    const double term = std::min(1.0 / j, gap);
    if (sweep) sweep->push_back({j, term});
    best = std::max(best, term);
  }
  return best;
}

int threshold_index(double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw Error(ErrorCode::kBadEpsilon, "eps must lie in (0, 1]");
  int j = std::max(1, static_cast<int>(std::floor(1.0 / eps)));
  while (j > 1 && eps * j > 1.0) --j;
  while (eps * (j + 1) <= 1.0) ++j;
  return j;
}

std::pair<bool, bool> aw_threshold_check(const GridBody& a, const GridBody& b, double eps,
                                         const MetricConfig& cfg) {
  const int j = threshold_index(eps);
  const bool left = attouch_wets(a, b, cfg) < eps;
  const bool right = hausdorff_truncated(a, b, j) < eps;
  return {left, right};
}

double hausdorff_on_truncations(const GridBody& a, const GridBody& b, double r) {
  return hausdorff_truncated(a, b, r);
}

}  // namespace polarlab
