#include "core/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "core/errors.hpp"

namespace polarlab {

namespace {

// Uniform bucket index for exact nearest-neighbor queries.
struct BucketGrid {
  explicit BucketGrid(const std::vector<Point2>& pts, double cell) : cell_(cell) {
    buckets_.reserve(pts.size());
    for (const auto& p : pts) {
      buckets_[key(p)].push_back(p);
      lo_[0] = std::min(lo_[0], p[0]);
      lo_[1] = std::min(lo_[1], p[1]);
      hi_[0] = std::max(hi_[0], p[0]);
      hi_[1] = std::max(hi_[1], p[1]);
    }
  }

  long long key(const Point2& p) const {
    const long long ix = static_cast<long long>(std::floor(p[0] / cell_));
    const long long iy = static_cast<long long>(std::floor(p[1] / cell_));
    return ix * 2000003LL + iy;
  }

  // Rings are expanded until the nearest possible point of the next ring
  // cannot beat the current best; the farthest bbox corner bounds the search.
  double nearest(const Point2& p) const {
    const long long cx = static_cast<long long>(std::floor(p[0] / cell_));
    const long long cy = static_cast<long long>(std::floor(p[1] / cell_));
    const double far_dx = std::max(std::abs(p[0] - lo_[0]), std::abs(p[0] - hi_[0]));
    const double far_dy = std::max(std::abs(p[1] - lo_[1]), std::abs(p[1] - hi_[1]));
    const long long max_ring =
        static_cast<long long>(std::floor(std::hypot(far_dx, far_dy) / cell_)) + 2;
    double best2 = kInf;
    for (long long ring = 0; ring <= max_ring; ++ring) {
      if (!is_inf(best2)) {
        const double ring_min = (ring - 1) > 0 ? (ring - 1) * cell_ : 0.0;
        if (ring_min * ring_min > best2) break;
      }
      for (long long dx = -ring; dx <= ring; ++dx) {
        for (long long dy = -ring; dy <= ring; ++dy) {
          if (std::max(std::llabs(dx), std::llabs(dy)) != ring) continue;
          auto it = buckets_.find((cx + dx) * 2000003LL + (cy + dy));
          if (it == buckets_.end()) continue;
          for (const auto& q : it->second) {
            const double d2 = (p[0] - q[0]) * (p[0] - q[0]) + (p[1] - q[1]) * (p[1] - q[1]);
            best2 = std::min(best2, d2);
          }
        }
      }
    }
    return std::sqrt(best2);
  }

  double cell_;
  Point2 lo_{kInf, kInf};
  Point2 hi_{-kInf, -kInf};
  std::unordered_map<long long, std::vector<Point2>> buckets_;
};

double directed_max_min(const std::vector<Point2>& from, const BucketGrid& to) {
  double worst = 0.0;
  for (const auto& p : from) worst = std::max(worst, to.nearest(p));
  return worst;
}

}  // namespace

PointCloud brute_polar(const PointCloud& sample, double lattice_step, double bound) {
  if (sample.points.empty()) throw Error(ErrorCode::kEmptySample, "empty sample");
  if (!(lattice_step > 0.0) || !(bound > 0.0))
    throw Error(ErrorCode::kBadParameter, "lattice step and bound must be > 0");

  // Only extreme points of the sample can attain the sup; reducing to the
  // hull keeps the scan exact and fast for solid input clouds.
  std::vector<Point2> gens = sample.points;
  if (gens.size() > 8) {
    Polytope2 hull(gens);
    gens = hull.vertices();
  }

  PointCloud out;
  out.bound = bound;
  out.spacing = lattice_step;
  const long long m = static_cast<long long>(std::floor(bound / lattice_step));
  for (long long iy = -m; iy <= m; ++iy) {
    for (long long ix = -m; ix <= m; ++ix) {
      const Point2 x{ix * lattice_step, iy * lattice_step};
      if (x[0] * x[0] + x[1] * x[1] > bound * bound) continue;
      bool inside = true;
      for (const auto& a : gens) {
        if (a[0] * x[0] + a[1] * x[1] > 1.0) {
          inside = false;
          break;
        }
      }
      if (inside) out.points.push_back(x);
    }
  }
  return out;
}

double brute_hausdorff(const PointCloud& p, const PointCloud& q) {
  if (p.points.empty() || q.points.empty()) throw Error(ErrorCode::kEmptyCloud, "empty cloud");
  const double cell_p = p.spacing > 0 ? p.spacing : std::max(1e-3, p.bound / 64.0);
  const double cell_q = q.spacing > 0 ? q.spacing : std::max(1e-3, q.bound / 64.0);
  const BucketGrid bp(p.points, std::max(cell_p, 1e-6));
  const BucketGrid bq(q.points, std::max(cell_q, 1e-6));
  return std::max(directed_max_min(p.points, bq), directed_max_min(q.points, bp));
}

double scalar_ahm(double r, double s, double tol) {
  if (!(r > 0.0) || !(s > 0.0) || !(tol > 0.0))
    throw Error(ErrorCode::kBadParameter, "scalar_ahm needs positive inputs");
  double a = r, h = s;
  while (std::abs(a - h) > tol) {
    const double an = (a + h) / 2.0;
    const double hn = 2.0 / (1.0 / a + 1.0 / h);
    a = an;
    h = hn;
  }
  return a;
}

PointCloud boundary_cloud(const Polytope2& p, double spacing) {
  if (!p.is_bounded()) throw Error(ErrorCode::kBadParameter, "boundary cloud needs a bounded polytope");
  PointCloud out;
  out.spacing = spacing;
  const auto& v = p.vertices();
  const std::size_t m = v.size();
  if (m == 1) {
    out.points.push_back(v[0]);
    out.bound = std::hypot(v[0][0], v[0][1]);
    return out;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % m];
    const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
    const int steps = std::max(1, static_cast<int>(std::ceil(len / spacing)));
    for (int k = 0; k < steps; ++k) {
      const double t = static_cast<double>(k) / steps;
      out.points.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
    }
    out.bound = std::max(out.bound, std::hypot(a[0], a[1]));
  }
  return out;
}

PointCloud lattice_cloud(const GridBody& a, double lattice_step, double bound) {
  if (a.grid().dimension() != 2)
    throw Error(ErrorCode::kBadParameter, "lattice cloud needs a planar body");
  PointCloud out;
  out.bound = bound;
  out.spacing = lattice_step;
  const auto& rho = a.radial();
  const int n = a.grid().size();
  const double step_angle = a.grid().angle_step();
  const long long m = static_cast<long long>(std::floor(bound / lattice_step));
  for (long long iy = -m; iy <= m; ++iy) {
    for (long long ix = -m; ix <= m; ++ix) {
      const Point2 x{ix * lattice_step, iy * lattice_step};
      const double r = std::hypot(x[0], x[1]);
      if (r > bound) continue;
      if (r == 0.0) {
        out.points.push_back(x);
        continue;
      }
      double phi = std::atan2(x[1], x[0]);
      if (phi < 0) phi += 2.0 * std::numbers::pi;
      const int i0 = static_cast<int>(std::floor(phi / step_angle)) % n;
      const int i1 = (i0 + 1) % n;
      const double frac = phi / step_angle - std::floor(phi / step_angle);
      const double r0 = rho[i0], r1 = rho[i1];
      double limit;
      if (is_inf(r0) && is_inf(r1)) {
        limit = kInf;
      } else if (is_inf(r0) || is_inf(r1)) {
        limit = std::min(r0, r1);  // conservative at a recession boundary
      } else {
        limit = (1.0 - frac) * r0 + frac * r1;
      }
      if (r <= limit) out.points.push_back(x);
    }
  }
  return out;
}

}  // namespace polarlab
