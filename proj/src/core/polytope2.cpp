#include "core/polytope2.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/linear_map.hpp"

namespace polarlab {

namespace {

constexpr double kEps = 1e-12;

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dot(const Point2& a, const Point2& b) { return a[0] * b[0] + a[1] * b[1]; }

double norm(const Point2& a) { return std::hypot(a[0], a[1]); }

Point2 normalize(const Point2& a) {
  const double n = norm(a);
  if (n < kEps) throw Error(ErrorCode::kBadParameter, "cannot normalize zero vector");
  return {a[0] / n, a[1] / n};
}

// Andrew monotone chain; returns CCW hull with strict turns.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) {
                          return std::abs(a[0] - b[0]) < kEps && std::abs(a[1] - b[1]) < kEps;
                        }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  std::vector<Point2> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= kEps) --k;
    hull[k++] = pts[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kEps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 ab{b[0] - a[0], b[1] - a[1]};
  const Point2 ap{p[0] - a[0], p[1] - a[1]};
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(ap, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Point2 c{a[0] + t * ab[0], a[1] + t * ab[1]};
  return std::hypot(p[0] - c[0], p[1] - c[1]);
}

double point_to_polytope(const Point2& p, const Polytope2& q) {
  const auto& v = q.vertices();
  if (v.size() == 1) return std::hypot(p[0] - v[0][0], p[1] - v[0][1]);
  if (q.contains(p)) return 0.0;
  double best = kInf;
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best, segment_distance(p, v[i], v[(i + 1) % v.size()]));
  return best;
}

}  // namespace

Polytope2::Polytope2(std::vector<Point2> vertices, std::vector<Point2> rays) {
  if (vertices.empty()) throw Error(ErrorCode::kInvalidBody, "polytope needs at least one vertex");
  vertices_ = convex_hull(std::move(vertices));
  for (const auto& r : rays) rays_.push_back(normalize(r));
  // 0 in cch(vertices) is enough for the mixed vertex+ray form; the pure
  // forms get the exact membership test.
  const bool ok = (rays_.empty() || is_cone_at_origin())
                      ? contains({0.0, 0.0})
                      : Polytope2(vertices_).contains({0.0, 0.0});
  if (!ok) throw Error(ErrorCode::kInvalidBody, "polytope does not contain the origin");
}

Polytope2 Polytope2::square(double a) {
  return Polytope2({{a, a}, {-a, a}, {-a, -a}, {a, -a}});
}

Polytope2 Polytope2::cross_polytope(double r) {
  return Polytope2({{r, 0}, {0, r}, {-r, 0}, {0, -r}});
}

Polytope2 Polytope2::cone(int j) {
  if (j != 1 && j != 2) throw Error(ErrorCode::kBadIndex, "cone axis must be 1 or 2");
  const double c = std::sqrt(0.5);
  if (j == 2) return Polytope2({{0.0, 0.0}}, {{c, c}, {-c, c}});
  return Polytope2({{0.0, 0.0}}, {{c, c}, {c, -c}});
}

bool Polytope2::is_cone_at_origin() const {
  return vertices_.size() == 1 && std::abs(vertices_[0][0]) < kEps &&
         std::abs(vertices_[0][1]) < kEps && !rays_.empty();
}

bool Polytope2::contains(const Point2& p, double tol) const {
  if (vertices_.size() == 1 && rays_.empty()) {
    return std::hypot(p[0] - vertices_[0][0], p[1] - vertices_[0][1]) <= tol;
  }
  if (is_cone_at_origin()) {
    // p in cone(r1, r2) iff it lies on the inner side of both edge rays.
    if (rays_.size() == 1) {
      const double along = dot(p, rays_[0]);
      const double off = std::abs(p[0] * rays_[0][1] - p[1] * rays_[0][0]);
      return along >= -tol && off <= tol;
    }
    const Point2& r1 = rays_[0];
    const Point2& r2 = rays_[1];
    const double orient = r1[0] * r2[1] - r1[1] * r2[0];
    const double s1 = r1[0] * p[1] - r1[1] * p[0];
    const double s2 = r2[0] * p[1] - r2[1] * p[0];
    if (orient >= 0) return s1 >= -tol && s2 <= tol;
    return s1 <= tol && s2 >= -tol;
  }
  if (!rays_.empty()) throw Error(ErrorCode::kBadParameter, "containment for mixed V+R form is not supported");
  if (vertices_.size() == 2) return segment_distance(p, vertices_[0], vertices_[1]) <= tol;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < -tol) return false;
  }
  return true;
}

bool Polytope2::interior_contains_origin(double tol) const {
  if (vertices_.size() < 3 || !rays_.empty()) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], {0.0, 0.0}) <= tol) return false;
  }
  return true;
}

double Polytope2::support(const Point2& u) const {
  for (const auto& r : rays_)
    if (dot(r, u) > kEps) return kInf;
  double best = -kInf;
  for (const auto& v : vertices_) best = std::max(best, dot(v, u));
  return best;
}

Polytope2 Polytope2::polar() const {
  if (is_cone_at_origin()) {
    if (rays_.size() == 1) {
      const Point2& r = rays_[0];
      return Polytope2({{0.0, 0.0}}, {{r[1], -r[0]}, {-r[1], r[0]}, {-r[0], -r[1]}});
    }
    Point2 r1 = rays_[0], r2 = rays_[1];
    if (r1[0] * r2[1] - r1[1] * r2[0] < 0) std::swap(r1, r2);  // r1 -> r2 CCW
    // Polar cone of cone(r1, r2): rotate r1 clockwise and r2 counterclockwise
    // by a quarter turn.
    return Polytope2({{0.0, 0.0}}, {{r1[1], -r1[0]}, {-r2[1], r2[0]}});
  }
  if (!interior_contains_origin())
    throw Error(ErrorCode::kNotInterior, "exact bounded polar requires 0 in the interior");
  // Dual vertex for each edge pair <v_i, x> = 1, <v_{i+1}, x> = 1.
  const std::size_t m = vertices_.size();
  std::vector<Point2> dual;
  dual.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % m];
    const double det = a[0] * b[1] - a[1] * b[0];
    if (std::abs(det) < kEps) throw Error(ErrorCode::kInvalidBody, "degenerate edge in polar");
    dual.push_back({(b[1] - a[1]) / det, (a[0] - b[0]) / det});
  }
  return Polytope2(std::move(dual));
}

Polytope2 Polytope2::linear_image(const LinearMap& t) const {
  if (t.dim() != 2) throw Error(ErrorCode::kBadParameter, "map dimension mismatch");
  std::vector<Point2> v;
  v.reserve(vertices_.size());
  for (const auto& p : vertices_) {
    Point2 q;
    t.apply(p.data(), q.data());
    v.push_back(q);
  }
  std::vector<Point2> r;
  r.reserve(rays_.size());
  for (const auto& p : rays_) {
    Point2 q;
    t.apply(p.data(), q.data());
    r.push_back(normalize(q));
  }
  return Polytope2(std::move(v), std::move(r));
}

GridBody Polytope2::to_grid_body(GridPtr grid) const {
  if (grid->dimension() != 2) throw Error(ErrorCode::kBadParameter, "planar polytope needs a planar grid");
  const int n = grid->size();
  std::vector<double> h(n);
  for (int i = 0; i < n; ++i) {
    const double* u = grid->direction(i);
    h[i] = support({u[0], u[1]});
  }
  return GridBody(std::move(grid), std::move(h));
}

double Polytope2::hausdorff_exact(const Polytope2& p, const Polytope2& q) {
  if (!p.is_bounded() || !q.is_bounded())
    throw Error(ErrorCode::kBadParameter, "exact Hausdorff needs bounded polytopes");
  double best = 0.0;
  for (const auto& v : p.vertices()) best = std::max(best, point_to_polytope(v, q));
  for (const auto& w : q.vertices()) best = std::max(best, point_to_polytope(w, p));
  return best;
}

}  // namespace polarlab
