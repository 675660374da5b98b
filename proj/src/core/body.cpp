#include "core/body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/linear_map.hpp"

namespace polarlab {

namespace {

// Radial scan for the planar grid. Offsets are visited outward from d = 0 so
// the scan can stop once no farther constraint can beat the current minimum:
// every remaining term is at least h_min / cos_offset(d).
double radial_at_2d(const DirectionGrid& g, const std::vector<double>& h, int i, double h_min) {
  const int n = g.size();
  const int window = g.positive_window();
  double best = kInf;
  for (int d = 0; d <= window; ++d) {
    const double c = g.cos_offset(d);
    if (c <= 0.0) break;
    if (best == 0.0) break;
    if (!is_inf(best) && h_min >= best * c) break;
    const double hp = h[(i + d) % n];
    if (!is_inf(hp)) best = std::min(best, hp / c);
    if (d > 0) {
      const double hm = h[(i - d + n) % n];
      if (!is_inf(hm)) best = std::min(best, hm / c);
    }
  }
  return best;
}

double radial_at_nd(const DirectionGrid& g, const std::vector<double>& h, int i) {
  double best = kInf;
  for (int k = 0; k < g.size(); ++k) {
    if (is_inf(h[k])) continue;
    const double c = g.dot(i, g.direction(k));
    if (c <= DirectionGrid::kAngleTol) continue;
    best = std::min(best, h[k] / c);
    if (best == 0.0) break;
  }
  return best;
}

}  // namespace

std::vector<double> canonical_radial(const DirectionGrid& grid, const std::vector<double>& support) {
  const int n = grid.size();
  std::vector<double> rho(n, kInf);
  double h_min = kInf;
  bool any_finite = false;
  for (double h : support) {
    if (!is_inf(h)) {
      any_finite = true;
      h_min = std::min(h_min, h);
    }
  }
  if (!any_finite) return rho;  // no constraints: the whole space

  if (grid.dimension() == 2) {
    for (int i = 0; i < n; ++i) rho[i] = radial_at_2d(grid, support, i, h_min);
  } else {
    for (int i = 0; i < n; ++i) rho[i] = radial_at_nd(grid, support, i);
  }
  return rho;
}

GridBody::GridBody(GridPtr grid, std::vector<double> support) {
  if (!grid) throw Error(ErrorCode::kBadParameter, "null grid");
  if (static_cast<int>(support.size()) != grid->size())
    throw Error(ErrorCode::kBadParameter, "support sample count does not match grid");
  for (double h : support)
    if (!(h >= 0.0)) throw Error(ErrorCode::kInvalidBody, "support samples must be >= 0 (0 must belong to the body)");
  auto data = std::make_shared<Data>();
  data->grid = std::move(grid);
  data->support = std::move(support);
  data_ = std::move(data);
}

GridBody GridBody::with_radial(GridPtr grid, std::vector<double> support,
                               std::vector<double> radial) {
  GridBody b(std::move(grid), std::move(support));
  std::call_once(b.data_->radial_once, [&] { b.data_->radial = std::move(radial); });
  return b;
}

const std::vector<double>& GridBody::radial() const {
  std::call_once(data_->radial_once,
                 [&] { data_->radial = canonical_radial(*data_->grid, data_->support); });
  return data_->radial;
}

double GridBody::nu() const {
  double cached = data_->nu_cache.load(std::memory_order_relaxed);
  if (cached < 0.0) {
    cached = 0.0;
    for (double r : radial()) cached = std::max(cached, r);
    data_->nu_cache.store(cached, std::memory_order_relaxed);
  }
  return cached;
}

bool GridBody::bounded() const {
  for (double h : support())
    if (is_inf(h)) return false;
  return true;
}

bool GridBody::has_interior() const {
  for (double r : radial())
    if (!(r > 0.0)) return false;
  return true;
}

std::vector<double> support_from_radial(const DirectionGrid& g, const std::vector<double>& rho) {
  const int n = g.size();
  std::vector<double> h(n, 0.0);
  bool any_inf = false;
  bool any_zero = false;
  double r_max = 0.0;
  for (double r : rho) {
    if (is_inf(r))
      any_inf = true;
    else
      r_max = std::max(r_max, r);
    any_zero = any_zero || r == 0.0;
  }

  if (r_max == 0.0 && !any_inf) return h;  // the origin

  if (g.dimension() == 2) {
    // Distances to the next nonzero entry in each rotation direction let
    // the scan jump over the zero arcs of wedge-shaped bodies.
    std::vector<int> fwd, bwd;
    if (any_zero) {
      fwd.assign(n, 2 * n);
      bwd.assign(n, 2 * n);
      for (int i = 2 * n - 1; i >= 0; --i) {
        const int k = i % n;
        fwd[k] = rho[k] != 0.0 ? 0 : std::min(fwd[k], fwd[(k + 1) % n] + 1);
      }
      for (int i = 0; i < 2 * n; ++i) {
        const int k = i % n;
        bwd[k] = rho[k] != 0.0 ? 0 : std::min(bwd[k], bwd[(k - 1 + n) % n] + 1);
      }
    }

    const int window = g.positive_window();
    for (int i = 0; i < n; ++i) {
      double best = 0.0;
      for (int d = 0; d <= window;) {
        const double c = g.cos_offset(d);
        if (c <= 0.0) break;
        if (!any_inf && r_max * c <= best) break;
        const double rp = rho[(i + d) % n];
        const double rm = rho[(i - d + n) % n];
        if (is_inf(rp) || (d > 0 && is_inf(rm))) {
          best = kInf;
          break;
        }
        best = std::max(best, std::max(rp, d > 0 ? rm : 0.0) * c);
        int next = d + 1;
        if (any_zero && next <= window)
          next += std::min(fwd[(i + next) % n], bwd[(i - next + n) % n]);
        d = next;
      }
      h[i] = best;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      double best = 0.0;
      for (int k = 0; k < n; ++k) {
        const double c = g.dot(i, g.direction(k));
        if (c <= DirectionGrid::kAngleTol) continue;
        if (is_inf(rho[k])) {
          best = kInf;
          break;
        }
        best = std::max(best, rho[k] * c);
      }
      h[i] = best;
    }
  }
  return h;
}

GridBody GridBody::ball(GridPtr grid, double r) {
  if (!(r >= 0.0)) throw Error(ErrorCode::kInvalidBody, "ball radius must be >= 0");
  const int n = grid->size();
  return GridBody(std::move(grid), std::vector<double>(n, r));
}

GridBody GridBody::origin(GridPtr grid) { return ball(std::move(grid), 0.0); }

GridBody GridBody::whole_space(GridPtr grid) {
  const int n = grid->size();
  return GridBody(std::move(grid), std::vector<double>(n, kInf));
}

GridBody GridBody::segment(GridPtr grid, const std::vector<double>& to) {
  if (static_cast<int>(to.size()) != grid->dimension())
    throw Error(ErrorCode::kBadParameter, "segment endpoint dimension mismatch");
  const int n = grid->size();
  std::vector<double> h(n);
  for (int i = 0; i < n; ++i) h[i] = std::max(0.0, grid->dot(i, to.data()));
  return GridBody(std::move(grid), std::move(h));
}

GridBody GridBody::ellipse(GridPtr grid, double a, double b) {
  if (grid->dimension() != 2) throw Error(ErrorCode::kBadParameter, "ellipse needs dimension 2");
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorCode::kInvalidBody, "ellipse semi-axes must be > 0");
  const int n = grid->size();
  std::vector<double> h(n);
  for (int i = 0; i < n; ++i) {
    const double* u = grid->direction(i);
    h[i] = std::sqrt(a * a * u[0] * u[0] + b * b * u[1] * u[1]);
  }
  return GridBody(std::move(grid), std::move(h));
}

void require_same_grid(const GridBody& a, const GridBody& b) {
  if (!a.grid().compatible_with(b.grid()))
    throw Error(ErrorCode::kGridMismatch, "bodies live on different direction grids");
}

GridBody polar(const GridBody& a) {
  const auto& rho = a.radial();
  std::vector<double> h(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) h[i] = inv_ext(rho[i]);
  return GridBody(a.grid_ptr(), std::move(h));
}

GridBody minkowski_sum(const GridBody& a, const GridBody& b) {
  require_same_grid(a, b);
  std::vector<double> h(a.support().size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = a.support()[i] + b.support()[i];
  return GridBody(a.grid_ptr(), std::move(h));
}

GridBody intersect(const GridBody& a, const GridBody& b) {
  require_same_grid(a, b);
  std::vector<double> h(a.support().size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = std::min(a.support()[i], b.support()[i]);
  // The entrywise minimum is only an outer support model; replace it by the
  // support of the polyhedron it cuts out, sampled through the radial.
  std::vector<double> rho = canonical_radial(a.grid(), h);
  return GridBody(a.grid_ptr(), support_from_radial(a.grid(), rho));
}

GridBody hull_union(const GridBody& a, const GridBody& b) {
  require_same_grid(a, b);
  std::vector<double> h(a.support().size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = std::max(a.support()[i], b.support()[i]);
  return GridBody(a.grid_ptr(), std::move(h));
}

GridBody scale(const GridBody& a, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::kNonPositiveScale, "scale factor must be > 0");
  std::vector<double> h(a.support().size()), rho(a.support().size());
  const auto& ra = a.radial();
  for (std::size_t i = 0; i < h.size(); ++i) {
    h[i] = scale_ext(r, a.support()[i]);
    rho[i] = scale_ext(r, ra[i]);
  }
  return GridBody::with_radial(a.grid_ptr(), std::move(h), std::move(rho));
}

GridBody truncate(const GridBody& a, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::kBadParameter, "truncation radius must be > 0");
  std::vector<double> h(a.support().size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = std::min(a.support()[i], r);
  std::vector<double> rho = canonical_radial(a.grid(), h);
  return GridBody(a.grid_ptr(), support_from_radial(a.grid(), rho));
}

double eval_support(const GridBody& a, const double* w) {
  const DirectionGrid& g = a.grid();
  double norm2 = 0.0;
  for (int j = 0; j < g.dimension(); ++j) norm2 += w[j] * w[j];
  const double norm = std::sqrt(norm2);
  if (norm < 1e-300) return 0.0;

  if (g.dimension() == 2) {
    double phi = std::atan2(w[1], w[0]);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    double pos = phi / g.angle_step();
    const int n = g.size();
    int i0 = static_cast<int>(std::floor(pos));
    double frac = pos - i0;
    i0 %= n;
    if (i0 < 0) i0 += n;
    const int i1 = (i0 + 1) % n;
    const double snap = 1e-9;
    double h;
    if (frac < snap) {
      h = a.support()[i0];
    } else if (frac > 1.0 - snap) {
      h = a.support()[i1];
    } else {
      const double h0 = a.support()[i0], h1 = a.support()[i1];
      if (is_inf(h0) || is_inf(h1)) return kInf;
      h = (1.0 - frac) * h0 + frac * h1;
    }
    return scale_ext(norm, h);
  }

  std::vector<double> unit(g.dimension());
  for (int j = 0; j < g.dimension(); ++j) unit[j] = w[j] / norm;
  return scale_ext(norm, a.support()[g.nearest_index(unit.data())]);
}

GridBody linear_image(const LinearMap& t, const GridBody& a) {
  const DirectionGrid& g = a.grid();
  if (t.dim() != g.dimension()) throw Error(ErrorCode::kBadParameter, "map dimension mismatch");
  std::vector<double> h(g.size());
  std::vector<double> w(g.dimension());
  for (int i = 0; i < g.size(); ++i) {
    t.apply_transpose(g.direction(i), w.data());
    h[i] = eval_support(a, w.data());
  }
  return GridBody(a.grid_ptr(), std::move(h));
}

GridBody canonicalize(const GridBody& a) { return GridBody(a.grid_ptr(), a.support()); }

double nu(const GridBody& a) { return a.nu(); }

}  // namespace polarlab
