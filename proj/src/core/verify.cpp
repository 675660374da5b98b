#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/contraction.hpp"
#include "core/dualities.hpp"
#include "core/errors.hpp"
#include "core/linear_map.hpp"
#include "core/mean.hpp"
#include "core/metrics.hpp"
#include "core/oracle.hpp"

namespace polarlab {

namespace {

struct Worst {
  double value = 0.0;
  std::string where;

  void feed(double v, const std::string& name) {
    if (v > value) {
      value = v;
      where = name;
    }
  }
  std::string detail() const { return where.empty() ? "" : "worst: " + where; }
};

// 1 bit distance between doubles of the same sign; 0 for identical values.
double ulp_gap(double a, double b) {
  if (a == b) return 0.0;
  if (std::isinf(a) && std::isinf(b)) return 0.0;
  double lo = std::min(a, b), hi = std::max(a, b);
  double steps = 0.0;
  while (lo < hi && steps <= 4.0) {
    lo = std::nextafter(lo, kInf);
    steps += 1.0;
  }
  return lo >= hi ? steps : 5.0;  // saturate; anything past 4 ulps is a failure
}

bool interior_bounded(const CorpusEntry& e) { return e.body.bounded() && e.body.has_interior(); }

std::vector<const CorpusEntry*> mean_admissible(const std::vector<CorpusEntry>& corpus) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus)
    if (interior_bounded(e)) out.push_back(&e);
  return out;
}

void bodies_rows(Report& r, const std::vector<CorpusEntry>& corpus, const Config& cfg) {
  // Double polar returns the body, measured in the Attouch-Wets metric.
  {
    Worst w;
    for (const auto& e : corpus)
      w.feed(attouch_wets(polar(polar(e.body)), e.body, cfg.metric), e.name);
    r.add("bodies.bipolar", "double polar returns the body", w.value, 5e-3, w.detail());
  }

  // Inclusion reverses under polar: pairs h_A <= h_K by construction.
  {
    Worst w;
    for (const auto& e : corpus) {
      for (const auto& f : corpus) {
        const GridBody small = intersect(e.body, f.body);
        const GridBody big = hull_union(e.body, f.body);
        const GridBody ps = polar(small), pb = polar(big);
        for (int i = 0; i < ps.size(); ++i) {
          const double hb = pb.support()[i], hs = ps.support()[i];
          if (is_inf(hb)) continue;  // hs >= hb trivially
          w.feed(is_inf(hs) ? 0.0 : hb - hs, e.name + "/" + f.name);
        }
      }
    }
    r.add("bodies.order_reversal", "polar reverses inclusion", w.value, 0.0, w.detail());
  }

  // Polar of an intersection is the hull of the polars (exact on the grid).
  {
    Worst w;
    for (const auto& e : corpus)
      for (const auto& f : corpus)
        w.feed(hausdorff_on_truncations(polar(intersect(e.body, f.body)),
                                        hull_union(polar(e.body), polar(f.body))),
               e.name + "/" + f.name);
    r.add("bodies.polar_of_intersection", "polar of intersection is hull of polars", w.value,
          5e-3, w.detail());
  }

  // Dual direction, compared through radial samples: the support carrier of
  // an intersection is an outer model, the radial samples are tight.
  {
    Worst w;
    for (const auto& e : corpus) {
      for (const auto& f : corpus) {
        const GridBody lhs = polar(hull_union(e.body, f.body));
        const GridBody rhs = intersect(polar(e.body), polar(f.body));
        const auto& ra = lhs.radial();
        const auto& rb = rhs.radial();
        double gap = 0.0;
        for (std::size_t i = 0; i < ra.size(); ++i) {
          if (is_inf(ra[i]) && is_inf(rb[i])) continue;
          const double cap = 10.0;
          gap = std::max(gap, std::abs(std::min(ra[i], cap) - std::min(rb[i], cap)));
        }
        w.feed(gap, e.name + "/" + f.name);
      }
    }
    r.add("bodies.polar_of_hull", "polar of hull union is intersection of polars", w.value, 5e-3,
          w.detail());
  }

  // Exact planar engine against the grid engine.
  {
    Worst w;
    for (const auto& e : corpus) {
      if (!e.exact || !e.exact->interior_contains_origin()) continue;
      const Polytope2 exact_polar = e.exact->polar();
      const GridBody grid_polar = polar(e.body);
      w.feed(hausdorff(exact_polar.to_grid_body(e.body.grid_ptr()), grid_polar), e.name);
    }
    r.add("bodies.exact_cross_check", "grid polar matches the exact planar polar", w.value, 5e-3,
          w.detail());
  }

  // Dyadic scaling commutes with polar to the last bit.
  {
    Worst w;
    for (const auto& e : corpus) {
      for (double s : {2.0, 0.5, 4.0, 0.125}) {
        const GridBody lhs = polar(scale(e.body, s));
        const GridBody rhs = scale(polar(e.body), 1.0 / s);
        double gap = 0.0;
        for (int i = 0; i < lhs.size(); ++i)
          gap = std::max(gap, ulp_gap(lhs.support()[i], rhs.support()[i]));
        w.feed(gap, e.name);
      }
    }
    r.add("bodies.scaling_exact", "polar of a dyadic scaling matches bit for bit", w.value, 1.0,
          w.detail());
  }

  // Composition of linear images.
  if (cfg.dimension == 2) {
    const LinearMap t1 = LinearMap::diagonal({2.0, 1.0});
    const LinearMap t2 = LinearMap::rotation2(std::numbers::pi / 6.0);
    Worst w;
    double tol = 0.0;
    for (const auto& e : corpus) {
      if (!e.body.bounded()) continue;
      const GridBody twice = linear_image(t2, linear_image(t1, e.body));
      const GridBody once = linear_image(t2.compose(t1), e.body);
      w.feed(hausdorff(twice, once), e.name);
      tol = std::max(tol, 2.0 * cfg.tau_for_scale(2.0 * e.body.nu()));
    }
    r.add("bodies.image_composition", "linear images compose", w.value, tol, w.detail());
  }
}

void metrics_rows(Report& r, const std::vector<CorpusEntry>& corpus, const Config& cfg) {
  // Metric axioms on the corpus.
  {
    Worst w;
    for (const auto& e : corpus) {
      w.feed(attouch_wets(e.body, e.body, cfg.metric), e.name);
      for (const auto& f : corpus)
        w.feed(std::abs(attouch_wets(e.body, f.body, cfg.metric) -
                        attouch_wets(f.body, e.body, cfg.metric)),
               e.name + "/" + f.name);
    }
    r.add("metrics.identity_symmetry", "self distance vanishes and swaps agree", w.value, 1e-12,
          w.detail());
  }
  {
    Worst w;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        for (std::size_t k = j + 1; k < corpus.size(); ++k) {
          const double ab = attouch_wets(corpus[i].body, corpus[j].body, cfg.metric);
          const double bc = attouch_wets(corpus[j].body, corpus[k].body, cfg.metric);
          const double ac = attouch_wets(corpus[i].body, corpus[k].body, cfg.metric);
          w.feed(ac - ab - bc, corpus[i].name + "/" + corpus[j].name + "/" + corpus[k].name);
        }
      }
    }
    r.add("metrics.triangle", "triangle inequality for the truncation metric", w.value, 1e-12,
          w.detail());
  }

  // Capping the support samples at the sweep radius leaves the sweep
  // unchanged: the sampling only ever sees the capped values.
  {
    const auto capped_body = [&](const GridBody& a) {
      std::vector<double> h(a.support().size());
      for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = std::min(a.support()[i], static_cast<double>(cfg.metric.j_max));
      return GridBody(a.grid_ptr(), std::move(h));
    };
    Worst w;
    for (const auto& e : corpus) {
      for (const auto& f : corpus) {
        const double full = attouch_wets(e.body, f.body, cfg.metric);
        const double capped = attouch_wets(capped_body(e.body), capped_body(f.body), cfg.metric);
        w.feed(std::abs(full - capped), e.name + "/" + f.name);
      }
    }
    r.add("metrics.truncation_stable", "sweep ignores mass beyond its cap", w.value, 0.0,
          w.detail());
  }

  // On bounded bodies the truncation metric is sandwiched by the sup metric.
  {
    Worst w;
    for (const auto& e : corpus) {
      if (!e.body.bounded()) continue;
      for (const auto& f : corpus) {
        if (!f.body.bounded()) continue;
        const double dh = hausdorff(e.body, f.body);
        const double daw = attouch_wets(e.body, f.body, cfg.metric);
        const int j0 = std::max(1, static_cast<int>(std::ceil(std::max(e.body.nu(), f.body.nu()))));
        w.feed(daw - dh, e.name + "/" + f.name);
        w.feed(std::min(1.0 / j0, dh) - daw, e.name + "/" + f.name);
      }
    }
    r.add("metrics.bounded_equivalence", "bounded bodies: sweep value sandwiched by sup gap",
          w.value, 1e-12, w.detail());
  }

  // Threshold equivalence on seeded pairs.
  {
    int disagreements = 0;
    const int pairs = 200;
    for (int p = 0; p < pairs; ++p) {
      const GridBody a = random_any_body(cfg, cfg.seed + 2 * p);
      const GridBody b = random_any_body(cfg, cfg.seed + 2 * p + 1);
      for (double eps : {0.9, 0.5, 1.0 / 3.0, 0.2, 0.11}) {
        const auto [left, right] = aw_threshold_check(a, b, eps, cfg.metric);
        if (left != right) ++disagreements;
      }
    }
    r.add("metrics.threshold_agreement",
          "sweep threshold agrees with the matching single truncation",
          static_cast<double>(disagreements), 0.0, "200 seeded pairs x 5 thresholds");
  }
}

void mean_rows(Report& r, const std::vector<CorpusEntry>& corpus, const Config& cfg) {
  const auto admissible = mean_admissible(corpus);
  const LinearMap t_rot = LinearMap::rotation2(std::numbers::pi / 6.0);

  Worst symmetry, exchange, self_polar, monotone, equivariance, stability;
  Worst interleave, convergence;
  double tol_gamma = 0.0;
  double tau_worst = 0.0;

  for (std::size_t i = 0; i < admissible.size(); ++i) {
    for (std::size_t j = i; j < admissible.size(); ++j) {
      const GridBody& a = admissible[i]->body;
      const GridBody& k = admissible[j]->body;
      const std::string tag = admissible[i]->name + "/" + admissible[j]->name;
      tol_gamma = std::max(tol_gamma, 10.0 * cfg.tau_pair(a, k));
      tau_worst = std::max(tau_worst, cfg.tau_pair(a, k));

      const MeanTrace fwd = geometric_mean(a, k, cfg.mean_tol, cfg.mean_max_iter);
      convergence.feed(fwd.converged ? static_cast<double>(fwd.iterations) : 1e9, tag);

      // Interleaving H_m inside A_m, re-run with recorded iterates.
      {
        GridBody am = a, hm = k;
        for (int m = 0; m < fwd.iterations; ++m) {
          GridBody na = scale(minkowski_sum(am, hm), 0.5);
          GridBody nh = polar(scale(minkowski_sum(polar(am), polar(hm)), 0.5));
          am = std::move(na);
          hm = std::move(nh);
          double excess = 0.0;
          for (int q = 0; q < am.size(); ++q)
            excess = std::max(excess, hm.support()[q] - am.support()[q]);
          interleave.feed(excess, tag);
        }
      }
      // Gap never grows beyond grid slack.
      for (std::size_t m = 1; m < fwd.iterates.size(); ++m)
        interleave.feed(fwd.iterates[m].gap - fwd.iterates[m - 1].gap, tag);

      const MeanTrace bwd = geometric_mean(k, a, cfg.mean_tol, cfg.mean_max_iter);
      symmetry.feed(hausdorff(fwd.final, bwd.final), tag);

      const GridBody g_polars = geometric_mean(polar(a), polar(k), cfg.mean_tol, cfg.mean_max_iter).final;
      exchange.feed(hausdorff(g_polars, polar(fwd.final)), tag);

      const GridBody inner =
          geometric_mean(scale(a, 0.7), scale(k, 0.9), cfg.mean_tol, cfg.mean_max_iter).final;
      double excess = 0.0;
      for (int q = 0; q < inner.size(); ++q)
        excess = std::max(excess, inner.support()[q] - fwd.final.support()[q]);
      monotone.feed(excess, tag);

      if (cfg.dimension == 2) {
        const GridBody g_img =
            geometric_mean(linear_image(t_rot, a), linear_image(t_rot, k), cfg.mean_tol,
                           cfg.mean_max_iter)
                .final;
        equivariance.feed(hausdorff(g_img, linear_image(t_rot, fwd.final)), tag);
      }

      // Stability under a grid-scale perturbation of one operand.
      const GridBody perturbed = minkowski_sum(a, GridBody::ball(a.grid_ptr(), cfg.tau_pair(a, k)));
      const GridBody g_pert = geometric_mean(perturbed, k, cfg.mean_tol, cfg.mean_max_iter).final;
      stability.feed(hausdorff(g_pert, fwd.final), tag);
    }
  }

  for (const auto* e : admissible) {
    const GridBody g_self =
        geometric_mean(e->body, polar(e->body), cfg.mean_tol, cfg.mean_max_iter).final;
    self_polar.feed(hausdorff(g_self, GridBody::ball(e->body.grid_ptr(), 1.0)), e->name);
  }

  r.add("mean.symmetry", "mean is symmetric", symmetry.value, tol_gamma, symmetry.detail());
  r.add("mean.polar_exchange", "mean of polars is polar of mean", exchange.value, tol_gamma,
        exchange.detail());
  r.add("mean.self_polar", "mean with own polar is the unit ball", self_polar.value,
        tol_gamma + cfg.mean_tol, self_polar.detail());
  r.add("mean.monotone", "mean preserves inclusion", monotone.value, tau_worst, monotone.detail());
  if (cfg.dimension == 2)
    r.add("mean.linear_equivariance", "mean commutes with linear images", equivariance.value,
          tol_gamma, equivariance.detail());
  r.add("mean.stability", "mean is stable under grid-scale perturbations", stability.value,
        tol_gamma, stability.detail());
  r.add("mean.interleaving", "inner iterate stays inside outer iterate and the gap contracts",
        interleave.value, tau_worst, interleave.detail());
  r.add("mean.convergence_budget", "iteration count within budget for moderate bodies",
        convergence.value, 60.0, convergence.detail());

  // Ball oracle: the grid iteration reproduces the scalar limit.
  {
    Worst w;
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
      for (double b : {0.5, 1.0, 2.0, 3.0}) {
        const MeanTrace tr = geometric_mean(GridBody::ball(cfg.grid(), a),
                                            GridBody::ball(cfg.grid(), b), 1e-6, 60);
        std::ostringstream tag;
        tag << "r=" << a << ",s=" << b;
        w.feed(std::abs(tr.final.nu() - std::sqrt(a * b)), tag.str());
      }
    }
    r.add("mean.ball_oracle", "ball means match the scalar square-root limit", w.value,
          1e-4 + cfg.tau_for_scale(3.0), w.detail());
  }
}

void contraction_rows(Report& r, const std::vector<CorpusEntry>& corpus, const Config& cfg) {
  // Endpoint exactness.
  {
    Worst w;
    for (const auto& e : corpus) {
      const GridBody at0 = phi(e.body, 0.0, cfg.mean_tol, cfg.mean_max_iter);
      double gap = 0.0;
      for (int i = 0; i < at0.size(); ++i)
        gap = std::max(gap, ulp_gap(at0.support()[i], e.body.support()[i]));
      w.feed(gap, e.name);
      const GridBody at1 = phi(e.body, 1.0, cfg.mean_tol, cfg.mean_max_iter);
      w.feed(hausdorff(at1, GridBody::ball(e.body.grid_ptr(), 1.0)), e.name);
    }
    r.add("contraction.endpoints", "identity at t=0 and the unit ball at t=1", w.value, 0.0,
          w.detail());
  }

  // Polar equivariance across the t sweep.
  {
    Worst w;
    double tol = 0.0;
    for (const auto& e : corpus) {
      for (int k = 1; k <= 9; ++k) {
        const double t = k / 10.0;
        const GridBody lhs = polar(phi(e.body, t, cfg.mean_tol, cfg.mean_max_iter));
        const GridBody rhs = phi(polar(e.body), t, cfg.mean_tol, cfg.mean_max_iter);
        std::ostringstream tag;
        tag << e.name << " t=" << t;
        w.feed(hausdorff_on_truncations(lhs, rhs), tag.str());
      }
      tol = std::max(tol, 20.0 * cfg.tau(e.body));
    }
    r.add("contraction.equivariance", "contraction commutes with the polar map", w.value, tol,
          w.detail());
  }

  // Plateau: high t collapses psi to a ball regardless of the body.
  {
    Worst w;
    for (const auto& e : corpus) {
      for (double t : {0.62, 0.7, 0.8}) {
        const double radius = (1.0 - t) / t;
        std::ostringstream tag;
        tag << e.name << " t=" << t;
        w.feed(hausdorff(psi(e.body, t), GridBody::ball(e.body.grid_ptr(), radius)), tag.str());
      }
    }
    r.add("contraction.psi_plateau", "psi collapses to a ball for large t", w.value,
          cfg.tau_for_scale(1.0), w.detail());
  }

  // Segment-shrink body sits inside psi_t(A polar) polar.
  {
    Worst w;
    double tol = 0.0;
    for (const auto& e : corpus) {
      for (double t : {0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45}) {
        const GridBody lhs = kappa(e.body, t);
        const GridBody rhs = polar(psi(polar(e.body), t));
        double excess = 0.0;
        for (int i = 0; i < lhs.size(); ++i) {
          if (is_inf(rhs.support()[i])) continue;
          excess = std::max(excess, lhs.support()[i] - rhs.support()[i]);
        }
        std::ostringstream tag;
        tag << e.name << " t=" << t;
        w.feed(excess, tag.str());
      }
      tol = std::max(tol, cfg.tau(e.body));
    }
    r.add("contraction.kappa_inclusion", "radial shrink body stays inside the polar bound",
          w.value, tol, w.detail());
  }

  // Outer bound of the contraction for small t.
  {
    Worst w;
    double tol = 0.0;
    for (const auto& e : corpus) {
      for (double t : {0.1, 0.25, 0.4}) {
        Report c = claim1_check(e.body, t, cfg);
        std::ostringstream tag;
        tag << e.name << " t=" << t;
        w.feed(c.checks.front().residual, tag.str());
        tol = std::max(tol, c.checks.front().tolerance);
      }
    }
    r.add("contraction.outer_bound", "contracted body stays in the dilated original", w.value,
          tol, w.detail());
  }

  // Near-identity bound with the admissible-parameter formula.
  {
    bool ok = true;
    Worst w;
    for (const auto& e : corpus) {
      for (double eps : {1.0, 1.0 / 3.0, 0.6}) {
        Report c = claim2_check(e.body, eps, 5, cfg);
        ok = ok && c.all_pass();
        std::ostringstream tag;
        tag << e.name << " eps=" << eps;
        w.feed(c.checks.front().residual / c.checks.front().tolerance, tag.str());
      }
    }
    r.add("contraction.near_identity", "small t keeps the contraction near the identity",
          ok ? w.value : 2.0, 1.0, w.detail());
  }

  // Level sets of the outer radius are preserved by the straight-line
  // homotopy toward the enclosing ball.
  {
    Worst w;
    double tol = 0.0;
    for (const auto& e : corpus) {
      if (!e.body.bounded() || e.body.nu() <= 0.0) continue;
      const double radius = e.body.nu();
      const GridBody target = GridBody::ball(e.body.grid_ptr(), radius);
      for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        GridBody blend;
        if (s == 0.0)
          blend = e.body;
        else if (s == 1.0)
          blend = target;
        else
          blend = minkowski_sum(scale(e.body, 1.0 - s), scale(target, s));
        std::ostringstream tag;
        tag << e.name << " s=" << s;
        w.feed(std::abs(blend.nu() - radius), tag.str());
      }
      tol = std::max(tol, cfg.tau(e.body));
    }
    r.add("contraction.nu_level_set", "outer radius is constant along the ball blend", w.value,
          tol, w.detail());
  }
}

void dualities_rows(Report& r, const std::vector<CorpusEntry>& corpus, const Config& cfg) {
  if (cfg.dimension != 2) return;  // family certificates are enabled for the plane

  const std::vector<std::pair<std::string, LinearMap>> involutions = {
      {"diag(4,9)", LinearMap::diagonal({4.0, 9.0})},
      {"diag(1,-1)", LinearMap::diagonal({1.0, -1.0})},
      {"diag(2,-3)", LinearMap::diagonal({2.0, -3.0})},
      {"-I", LinearMap::diagonal({-1.0, -1.0})},
  };

  // Double application returns the body; inclusions reverse.
  {
    Worst dbl, ord;
    double tol = 0.0;
    for (const auto& [name, t] : involutions) {
      const SymmetricDuality d(t);
      for (const auto& e : corpus) {
        if (!interior_bounded(e)) continue;
        const GridBody once = dual_map(d, e.body);
        dbl.feed(hausdorff_on_truncations(dual_map(d, once), e.body), name + " " + e.name);
        tol = std::max(tol, 40.0 * cfg.tau(e.body));

        const GridBody small = scale(e.body, 0.75);
        const GridBody f_small = dual_map(d, small);
        double excess = 0.0;
        for (int i = 0; i < once.size(); ++i) {
          if (is_inf(f_small.support()[i])) continue;
          excess = std::max(excess, once.support()[i] - f_small.support()[i]);
        }
        ord.feed(excess, name + " " + e.name);
      }
    }
    r.add("duality.involution", "applying the duality twice returns the body", dbl.value, tol,
          dbl.detail());
    r.add("duality.order_reversal", "dualities reverse inclusion", ord.value,
          cfg.tau_for_scale(Config::kScaleCap), ord.detail());
  }

  // Adjoint route agrees with the direct route.
  {
    Worst w;
    double tol = 0.0;
    const SymmetricDuality d(LinearMap::diagonal({2.0, -3.0}));
    for (const auto& e : corpus) {
      w.feed(hausdorff_on_truncations(dual_map(d, e.body), dual_map_adjoint(d, e.body)), e.name);
      tol = std::max(tol, 2.0 * cfg.tau(e.body));
    }
    r.add("duality.adjoint_identity", "image-of-polar equals polar-of-preimage", w.value, tol,
          w.detail());
  }

  // Conjugation to the polar map for positive-definite T.
  {
    Worst w;
    double tol = 0.0;
    const LinearMap rot = LinearMap::rotation2(std::numbers::pi / 6.0);
    const std::vector<std::pair<std::string, LinearMap>> pd = {
        {"diag(4,9)", LinearMap::diagonal({4.0, 9.0})},
        {"rot-conj diag(2,5)",
         rot.transpose().compose(LinearMap::diagonal({2.0, 5.0})).compose(rot)},
    };
    for (const auto& [name, t] : pd) {
      const SymmetricDuality d(t);
      for (const auto& e : corpus) {
        if (!e.body.bounded()) continue;
        Report c = conjugation_check(d, e.body, cfg);
        w.feed(c.checks.front().residual, name + " " + e.name);
        tol = std::max(tol, c.checks.front().tolerance);
      }
    }
    r.add("duality.conjugation", "positive-definite dualities conjugate to the polar map",
          w.value, tol, w.detail());
  }

  // Unique fixed point evidence for positive-definite T.
  {
    const SymmetricDuality d(LinearMap::diagonal({4.0, 9.0}));
    const GridBody target = GridBody::ellipse(cfg.grid(), 2.0, 3.0);
    Worst w;
    double tol = 0.0;
    for (int s = 0; s < 20; ++s) {
      GridBody a = random_interior_body(cfg, cfg.seed + 100 + s);
      for (int step = 0; step < 4; ++step) {
        const GridBody fa = dual_map(d, a);
        if (hausdorff(a, fa) <= cfg.mean_tol) break;
        a = geometric_mean(a, fa, cfg.mean_tol, cfg.mean_max_iter).final;
      }
      std::ostringstream tag;
      tag << "start " << s;
      w.feed(hausdorff(a, target), tag.str());
      tol = std::max(tol, 50.0 * cfg.tau(a) + 10.0 * cfg.mean_tol);
    }
    r.add("duality.based_free_evidence",
          "descent from random bodies lands on the single fixed body", w.value, tol, w.detail());
  }

  // Indefinite T: the fixed family exists, is certified and is distinct.
  {
    Worst cert;
    double tol_fix = 0.0;
    bool distinct = true;
    double min_gap = kInf;
    for (const auto& [name, t] : involutions) {
      const SymmetricDuality d(t);
      if (d.positive_definite()) continue;
      std::vector<GridBody> members;
      for (double tv : {0.1, 0.2, 0.3, 0.4}) {
        const FixedPointResult y = fixpoint_family(d, tv, cfg.mean_tol, cfg);
        cert.feed(std::max(y.residual_polar_w, y.residual_fixed),
                  name + " t=" + std::to_string(tv));
        tol_fix = std::max(tol_fix, y.tol_fix);
        members.push_back(y.body);
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const double gap = hausdorff(members[i], members[j]);
          min_gap = std::min(min_gap, gap);
          distinct = distinct && gap > 10.0 * cfg.tau_pair(members[i], members[j]);
        }
      }
    }
    r.add("duality.fixed_family_certificates", "indefinite dualities fix the constructed family",
          cert.value, tol_fix, cert.detail());
    std::ostringstream detail;
    detail << "min pairwise gap " << min_gap;
    r.add_flag("duality.fixed_family_distinct", "family members are pairwise distinct", distinct,
               detail.str());
  }

  // Sign-pattern involution is exact on the grid.
  {
    const LinearMap w_map = LinearMap::diagonal({1.0, -1.0});
    Worst w;
    for (const auto& e : corpus) {
      const GridBody back = linear_image(w_map, linear_image(w_map, e.body));
      double gap = 0.0;
      for (int i = 0; i < back.size(); ++i)
        gap = std::max(gap, ulp_gap(back.support()[i], e.body.support()[i]));
      w.feed(gap, e.name);
    }
    r.add("duality.sign_involution", "reflections are exact involutions on the grid", w.value,
          0.0, w.detail());
  }

  // Orthogonal maps preserve polarity; a non-orthogonal map is flagged.
  {
    std::vector<GridBody> bodies;
    for (const auto& e : corpus) bodies.push_back(e.body);
    const Report ortho =
        polar_preserving_check(LinearMap::rotation2(std::numbers::pi / 6.0), bodies, cfg);
    r.add("duality.polar_preserving_orthogonal", "rotations commute with the polar map",
          ortho.checks.front().residual, ortho.checks.front().tolerance,
          ortho.checks.front().detail);
    const Report skew = polar_preserving_check(LinearMap::diagonal({2.0, 1.0}), bodies, cfg);
    r.add_flag("duality.polar_preserving_violation",
               "a non-orthogonal map fails the polarity test", skew.checks.front().pass,
               skew.checks.front().detail);
  }
}

void oracle_rows(Report& r, const std::vector<CorpusEntry>& corpus, const Config& cfg) {
  if (cfg.dimension != 2) return;

  // Discrete bipolar: two brute polars recover the hull.
  {
    Worst w;
    const double step = 0.02;
    for (const auto& e : corpus) {
      if (!e.exact || !e.exact->interior_contains_origin()) continue;
      PointCloud sample;
      sample.points = e.exact->vertices();
      for (const auto& p : e.exact->vertices())
        sample.bound = std::max(sample.bound, std::hypot(p[0], p[1]));
      const double bound1 = 1.0 / 0.2 + 1.0;  // generous polar bound for corpus bodies
      const PointCloud first = brute_polar(sample, step, bound1);
      const PointCloud second = brute_polar(first, step, sample.bound + 1.0);
      const PointCloud original = boundary_cloud(*e.exact, step);
      PointCloud second_boundary;
      second_boundary.spacing = step;
      Polytope2 hull(second.points);
      second_boundary = boundary_cloud(hull, step);
      w.feed(brute_hausdorff(second_boundary, original), e.name);
    }
    r.add("oracle.discrete_bipolar", "two lattice polars recover the hull", w.value,
          3.0 * (0.02 + 0.02), w.detail());
  }

  // Scalar iteration squares back to the product.
  {
    Worst w;
    const double tol = 1e-9;
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
      for (double b : {0.5, 1.0, 2.0, 3.0}) {
        const double m = scalar_ahm(a, b, tol);
        std::ostringstream tag;
        tag << a << "," << b;
        w.feed(std::abs(m * m - a * b), tag.str());
      }
    }
    r.add("oracle.scalar_product", "scalar mean squares to the product", w.value, 10.0 * tol,
          w.detail());
  }
}

}  // namespace

Report run_verify(const std::vector<CorpusEntry>& corpus, const Config& cfg) {
  if (corpus.empty()) throw Error(ErrorCode::kBadParameter, "corpus must be nonempty");
  Report r;
  r.scenario = "verify";
  r.echo_config(cfg);
  bodies_rows(r, corpus, cfg);
  metrics_rows(r, corpus, cfg);
  mean_rows(r, corpus, cfg);
  contraction_rows(r, corpus, cfg);
  dualities_rows(r, corpus, cfg);
  oracle_rows(r, corpus, cfg);
  return r;
}

Report run_verify(const Config& cfg) { return run_verify(builtin_corpus(cfg), cfg); }

}  // namespace polarlab
