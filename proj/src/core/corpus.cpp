#include "core/corpus.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "core/dualities.hpp"
#include "core/linear_map.hpp"

namespace polarlab {

namespace {

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GridBody halfplane_below(const Config& cfg, double offset) {
  // { x : x_n <= offset }: support finite only at +e_n.
  GridPtr grid = cfg.grid();
  const int n = grid->size();
  std::vector<double> h(n, kInf);
  for (int i = 0; i < n; ++i) {
    const double* u = grid->direction(i);
    bool axis = u[cfg.dimension - 1] > 1.0 - 1e-12;
    for (int c = 0; axis && c + 1 < cfg.dimension; ++c) axis = std::abs(u[c]) < 1e-12;
    if (axis) h[i] = offset;
  }
  return GridBody(std::move(grid), std::move(h));
}

}  // namespace

Polytope2 random_polygon(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int m = 6 + static_cast<int>(rng() % 4);  // 6..9 vertices
  std::vector<Point2> pts;
  pts.reserve(m);
  for (int k = 0; k < m; ++k) {
    // Jittered angular slots keep every gap well under pi, so 0 stays
    // interior with a healthy inradius.
    const double angle = 2.0 * std::numbers::pi * (k + 0.25 + 0.5 * next_unit(rng)) / m;
    const double radius = 1.0 + 0.6 * next_unit(rng);
    pts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return Polytope2(std::move(pts));
}

std::vector<CorpusEntry> builtin_corpus(const Config& cfg) {
  std::vector<CorpusEntry> out;
  GridPtr grid = cfg.grid();
  out.push_back({"origin", GridBody::origin(grid), std::nullopt});
  out.push_back({"ball", GridBody::ball(grid, 1.0), std::nullopt});
  out.push_back({"half_ball", GridBody::ball(grid, 0.5), std::nullopt});
  out.push_back({"double_ball", GridBody::ball(grid, 2.0), std::nullopt});
  if (cfg.dimension == 2) {
    Polytope2 square = Polytope2::square(1.0);
    Polytope2 cross = Polytope2::cross_polytope(1.0);
    Polytope2 polygon = random_polygon(cfg.seed);
    out.push_back({"square", square.to_grid_body(grid), square});
    out.push_back({"cross", cross.to_grid_body(grid), cross});
    out.push_back({"random_polygon", polygon.to_grid_body(grid), polygon});
  } else {
    // Axis-aligned cube and its dual as grid samples.
    const int n = grid->size();
    std::vector<double> hc(n), hx(n);
    for (int i = 0; i < n; ++i) {
      const double* u = grid->direction(i);
      double sum = 0.0, mx = 0.0;
      for (int c = 0; c < cfg.dimension; ++c) {
        sum += std::abs(u[c]);
        mx = std::max(mx, std::abs(u[c]));
      }
      hc[i] = sum;
      hx[i] = mx;
    }
    out.push_back({"cube", GridBody(grid, hc), std::nullopt});
    out.push_back({"cross", GridBody(grid, hx), std::nullopt});
    out.push_back({"scaled_ball", GridBody::ball(grid, 1.3), std::nullopt});
  }
  {
    std::vector<double> e1(cfg.dimension, 0.0);
    e1[0] = 1.0;
    out.push_back({"segment", GridBody::segment(grid, e1), std::nullopt});
  }
  if (cfg.dimension == 2) {
    out.push_back({"ellipse", GridBody::ellipse(grid, 2.0, 3.0), std::nullopt});
    out.push_back({"cone", cone_body(2, cfg), Polytope2::cone(2)});
  } else {
    out.push_back(
        {"ellipsoid", linear_image(LinearMap::diagonal(std::vector<double>(cfg.dimension, 2.0)),
                                   GridBody::ball(grid, 1.0)),
         std::nullopt});
    out.push_back({"cone", cone_body(cfg.dimension, cfg), std::nullopt});
  }
  out.push_back({"halfplane", halfplane_below(cfg, 1.0), std::nullopt});
  out.push_back({"space", GridBody::whole_space(grid), std::nullopt});
  return out;
}

GridBody random_interior_body(const Config& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int pick = static_cast<int>(rng() % 4);
  switch (pick) {
    case 0:
      return GridBody::ball(cfg.grid(), 0.3 + 2.0 * next_unit(rng));
    case 1:
      return random_polygon(seed * 1315423911ULL + 1).to_grid_body(cfg.grid());
    case 2: {
      const double a = 0.4 + 1.6 * next_unit(rng);
      const double b = 0.4 + 1.6 * next_unit(rng);
      return GridBody::ellipse(cfg.grid(), a, b);
    }
    default: {
      GridBody poly = random_polygon(seed * 2654435761ULL + 7).to_grid_body(cfg.grid());
      return minkowski_sum(poly, GridBody::ball(cfg.grid(), 0.2 + next_unit(rng)));
    }
  }
}

GridBody random_any_body(const Config& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xa5a5a5a55a5a5a5aULL);
  const int pick = static_cast<int>(rng() % 6);
  switch (pick) {
    case 0:
      return random_interior_body(cfg, seed + 1);
    case 1: {
      std::vector<double> to(cfg.dimension, 0.0);
      to[rng() % cfg.dimension] = 0.5 + 1.5 * next_unit(rng);
      return GridBody::segment(cfg.grid(), to);
    }
    case 2:
      return cone_body(1 + static_cast<int>(rng() % cfg.dimension), cfg);
    case 3:
      return halfplane_below(cfg, 0.5 + next_unit(rng));
    case 4:
      return GridBody::origin(cfg.grid());
    default: {
      std::vector<double> to(cfg.dimension, 0.0);
      to[0] = 2.0;
      return hull_union(random_interior_body(cfg, seed + 2), GridBody::segment(cfg.grid(), to));
    }
  }
}

}  // namespace polarlab
