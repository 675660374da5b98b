#include "polarlab/polarlab.h"

#include <chrono>
#include <cstring>
#include <ctime>
#include <sstream>
#include <string>

#include "core/body.hpp"
#include "core/body_parse.hpp"
#include "core/config.hpp"
#include "core/contraction.hpp"
#include "core/corpus.hpp"
#include "core/dualities.hpp"
#include "core/errors.hpp"
#include "core/linear_map.hpp"
#include "core/mean.hpp"
#include "core/metrics.hpp"
#include "core/report.hpp"
#include "core/verify.hpp"
#include "json.hpp"

using namespace polarlab;

struct plab_context {
  Config cfg;
  std::string last_error;
};

struct plab_body {
  GridBody body;
};

namespace {

plab_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return PLAB_ERR_PARSE;
    case ErrorCode::kInvalidBody: return PLAB_ERR_INVALID_BODY;
    case ErrorCode::kNonPositiveScale: return PLAB_ERR_NON_POSITIVE_SCALE;
    case ErrorCode::kSingularMap: return PLAB_ERR_SINGULAR_MAP;
    case ErrorCode::kNotInterior: return PLAB_ERR_NOT_INTERIOR;
    case ErrorCode::kNotInteriorBody: return PLAB_ERR_NOT_INTERIOR_BODY;
    case ErrorCode::kBadEpsilon: return PLAB_ERR_BAD_EPSILON;
    case ErrorCode::kBadParameter: return PLAB_ERR_BAD_PARAMETER;
    case ErrorCode::kBadIndex: return PLAB_ERR_BAD_INDEX;
    case ErrorCode::kNotPositiveDefinite: return PLAB_ERR_NOT_POSITIVE_DEFINITE;
    case ErrorCode::kPositiveDefinite: return PLAB_ERR_POSITIVE_DEFINITE;
    case ErrorCode::kEmptySample:
    case ErrorCode::kEmptyCloud: return PLAB_ERR_BAD_PARAMETER;
    case ErrorCode::kGridMismatch: return PLAB_ERR_GRID_MISMATCH;
    case ErrorCode::kNoConvergence: return PLAB_ERR_NO_CONVERGENCE;
  }
  return PLAB_ERR_INTERNAL;
}

template <typename Fn>
plab_status guarded(plab_context* ctx, Fn&& fn) {
  try {
    fn();
    return PLAB_OK;
  } catch (const Error& e) {
    if (ctx) ctx->last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return PLAB_ERR_INTERNAL;
  }
}

template <typename Fn>
plab_status guarded(Fn&& fn) {
  return guarded(static_cast<plab_context*>(nullptr), std::forward<Fn>(fn));
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

LinearMap map_from_rowmajor(const Config& cfg, const double* matrix) {
  if (!matrix) throw Error(ErrorCode::kBadParameter, "null matrix");
  const int n = cfg.dimension;
  std::vector<double> m(matrix, matrix + static_cast<std::size_t>(n) * n);
  return LinearMap(n, std::move(m));
}

nlohmann::json finite_or_inf(double x) {
  return is_inf(x) ? nlohmann::json("inf") : nlohmann::json(x);
}

std::string trace_to_csv(const MeanTrace& trace) {
  std::ostringstream out;
  out << "m,gap\n";
  for (const auto& step : trace.iterates) out << step.m << ',' << step.gap << '\n';
  return out.str();
}

}  // namespace

extern "C" {

plab_context* plab_context_new(int dimension, int grid_n, uint64_t seed) {
  if (dimension < 2) return nullptr;
  if (grid_n != 0 && grid_n < DirectionGrid::kMinDirections) return nullptr;
  auto* ctx = new plab_context;
  ctx->cfg.dimension = dimension;
  ctx->cfg.grid_n = grid_n;
  ctx->cfg.seed = seed;
  return ctx;
}

void plab_context_free(plab_context* ctx) { delete ctx; }

const char* plab_context_last_error(const plab_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

void plab_context_set_tolerance(plab_context* ctx, double tau_grid) {
  if (!ctx) return;
  if (tau_grid > 0.0)
    ctx->cfg.tau_override = tau_grid;
  else
    ctx->cfg.tau_override.reset();
}

int plab_context_grid_size(const plab_context* ctx) { return ctx ? ctx->cfg.effective_n() : 0; }

double plab_context_tolerance_for(const plab_context* ctx, const plab_body* body) {
  if (!ctx || !body) return 0.0;
  return ctx->cfg.tau(body->body);
}

const char* plab_version(void) { return "0.1.0"; }

void plab_string_free(char* text) { delete[] text; }

plab_status plab_body_parse(plab_context* ctx, const char* json, plab_body** out) {
  if (!ctx || !json || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] { *out = new plab_body{parse_body(json, ctx->cfg).body}; });
}

plab_status plab_body_ball(plab_context* ctx, double r, plab_body** out) {
  if (!ctx || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] { *out = new plab_body{GridBody::ball(ctx->cfg.grid(), r)}; });
}

void plab_body_free(plab_body* body) { delete body; }

plab_status plab_body_to_json(const plab_body* body, char** out) {
  if (!body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(body_to_json(body->body)); });
}

int plab_body_size(const plab_body* body) { return body ? body->body.size() : 0; }

plab_status plab_body_support(const plab_body* body, double* out, size_t len) {
  if (!body || !out) return PLAB_ERR_NULL_ARGUMENT;
  if (len < static_cast<size_t>(body->body.size())) return PLAB_ERR_BAD_PARAMETER;
  const auto& h = body->body.support();
  std::memcpy(out, h.data(), h.size() * sizeof(double));
  return PLAB_OK;
}

plab_status plab_body_radial(const plab_body* body, double* out, size_t len) {
  if (!body || !out) return PLAB_ERR_NULL_ARGUMENT;
  if (len < static_cast<size_t>(body->body.size())) return PLAB_ERR_BAD_PARAMETER;
  const auto& rho = body->body.radial();
  std::memcpy(out, rho.data(), rho.size() * sizeof(double));
  return PLAB_OK;
}

double plab_body_nu(const plab_body* body) { return body ? body->body.nu() : 0.0; }

#define PLAB_BINARY_OP(NAME, EXPR)                                            \
  plab_status NAME(const plab_body* a, const plab_body* b, plab_body** out) { \
    if (!a || !b || !out) return PLAB_ERR_NULL_ARGUMENT;                      \
    return guarded([&] { *out = new plab_body{EXPR(a->body, b->body)}; });    \
  }

PLAB_BINARY_OP(plab_minkowski_sum, minkowski_sum)
PLAB_BINARY_OP(plab_intersect, intersect)
PLAB_BINARY_OP(plab_hull_union, hull_union)
#undef PLAB_BINARY_OP

plab_status plab_polar(const plab_body* body, plab_body** out) {
  if (!body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new plab_body{polar(body->body)}; });
}

plab_status plab_scale(const plab_body* body, double r, plab_body** out) {
  if (!body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new plab_body{scale(body->body, r)}; });
}

plab_status plab_truncate(const plab_body* body, double r, plab_body** out) {
  if (!body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new plab_body{truncate(body->body, r)}; });
}

plab_status plab_linear_image(plab_context* ctx, const double* matrix, const plab_body* body,
                              plab_body** out) {
  if (!ctx || !matrix || !body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    *out = new plab_body{linear_image(map_from_rowmajor(ctx->cfg, matrix), body->body)};
  });
}

double plab_hausdorff(const plab_body* a, const plab_body* b) {
  if (!a || !b) return -1.0;
  try {
    return hausdorff(a->body, b->body);
  } catch (...) {
    return -1.0;
  }
}

double plab_hausdorff_truncated(const plab_body* a, const plab_body* b, double radius) {
  if (!a || !b || !(radius > 0.0)) return -1.0;
  try {
    return hausdorff_truncated(a->body, b->body, radius);
  } catch (...) {
    return -1.0;
  }
}

double plab_attouch_wets(const plab_body* a, const plab_body* b) {
  if (!a || !b) return -1.0;
  try {
    return attouch_wets(a->body, b->body);
  } catch (...) {
    return -1.0;
  }
}

plab_status plab_metrics_report(plab_context* ctx, const plab_body* a, const plab_body* b,
                                double eps, char** json_out) {
  if (!ctx || !a || !b || !json_out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    std::vector<SweepTerm> sweep;
    const double daw = attouch_wets(a->body, b->body, ctx->cfg.metric, &sweep);
    nlohmann::json j;
    j["d_h"] = finite_or_inf(hausdorff(a->body, b->body));
    j["d_aw"] = daw;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& s : sweep) terms.push_back({{"j", s.j}, {"term", s.term}});
    j["sweep"] = terms;
    if (eps > 0.0) {
      const auto [left, right] = aw_threshold_check(a->body, b->body, eps, ctx->cfg.metric);
      j["eps_check"] = {{"eps", eps},
                        {"j", threshold_index(eps)},
                        {"d_aw_below", left},
                        {"d_h_truncated_below", right},
                        {"agree", left == right}};
    }
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

plab_status plab_geometric_mean(plab_context* ctx, const plab_body* a, const plab_body* b,
                                double tol, int max_iter, plab_body** final_out,
                                char** trace_csv_out) {
  if (!ctx || !a || !b || !final_out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    const MeanTrace trace = geometric_mean(a->body, b->body, tol > 0 ? tol : ctx->cfg.mean_tol,
                                           max_iter > 0 ? max_iter : ctx->cfg.mean_max_iter);
    if (!trace.converged)
      throw Error(ErrorCode::kNoConvergence,
                  "mean iteration did not meet tolerance within the budget");
    *final_out = new plab_body{trace.final};
    if (trace_csv_out) *trace_csv_out = dup_string(trace_to_csv(trace));
  });
}

plab_status plab_psi(const plab_body* body, double t, plab_body** out) {
  if (!body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new plab_body{psi(body->body, t)}; });
}

plab_status plab_kappa(const plab_body* body, double t, plab_body** out) {
  if (!body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new plab_body{kappa(body->body, t)}; });
}

plab_status plab_phi(plab_context* ctx, const plab_body* body, double t, double tol,
                     plab_body** out) {
  if (!ctx || !body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    *out = new plab_body{
        phi(body->body, t, tol > 0 ? tol : ctx->cfg.mean_tol, ctx->cfg.mean_max_iter)};
  });
}

plab_status plab_contract_report(plab_context* ctx, const plab_body* body,
                                 const double* t_values, size_t count, double tol, char** csv_out,
                                 char** bodies_json_out) {
  if (!ctx || !body || !t_values || !csv_out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    const double mean_tol = tol > 0 ? tol : ctx->cfg.mean_tol;
    std::ostringstream csv;
    csv << "t,d_aw,equiv\n";
    nlohmann::json bodies = nlohmann::json::object();
    const GridBody dual = polar(body->body);
    for (size_t i = 0; i < count; ++i) {
      const double t = t_values[i];
      const GridBody image = phi(body->body, t, mean_tol, ctx->cfg.mean_max_iter);
      const double daw = attouch_wets(image, body->body, ctx->cfg.metric);
      const double equiv = hausdorff_on_truncations(
          polar(image), phi(dual, t, mean_tol, ctx->cfg.mean_max_iter));
      csv << t << ',' << daw << ',' << equiv << '\n';
      if (bodies_json_out) {
        std::ostringstream key;
        key << t;
        bodies[key.str()] = nlohmann::json::parse(body_to_json(image));
      }
    }
    *csv_out = dup_string(csv.str());
    if (bodies_json_out) *bodies_json_out = dup_string(bodies.dump(2) + "\n");
  });
}

plab_status plab_dual_map(plab_context* ctx, const double* matrix, const plab_body* body,
                          plab_body** out) {
  if (!ctx || !matrix || !body || !out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    const SymmetricDuality d(map_from_rowmajor(ctx->cfg, matrix));
    *out = new plab_body{dual_map(d, body->body)};
  });
}

plab_status plab_fixpoints_report(plab_context* ctx, const double* matrix,
                                  const double* t_values, size_t count, double tol,
                                  char** json_out) {
  if (!ctx || !matrix || !t_values || !json_out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    const SymmetricDuality d(map_from_rowmajor(ctx->cfg, matrix));
    nlohmann::json out = nlohmann::json::array();
    for (size_t i = 0; i < count; ++i) {
      const FixedPointResult y =
          fixpoint_family(d, t_values[i], tol > 0 ? tol : ctx->cfg.mean_tol, ctx->cfg);
      out.push_back({{"t", t_values[i]},
                     {"body", nlohmann::json::parse(body_to_json(y.body))},
                     {"residual_polar_W", y.residual_polar_w},
                     {"residual_fixed", y.residual_fixed},
                     {"tolerance", y.tol_fix},
                     {"certified", y.certified()}});
    }
    *json_out = dup_string(out.dump(2) + "\n");
  });
}

plab_status plab_duality_report(plab_context* ctx, const double* matrix, const char* check,
                                char** json_out) {
  if (!ctx || !matrix || !check || !json_out) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    const std::string kind = check;
    const SymmetricDuality d(map_from_rowmajor(ctx->cfg, matrix));
    const auto corpus = builtin_corpus(ctx->cfg);
    Report report;
    report.scenario = "duality." + kind;
    report.echo_config(ctx->cfg);

    if (kind == "conj") {
      for (const auto& e : corpus) {
        if (!e.body.bounded()) continue;
        Report one = conjugation_check(d, e.body, ctx->cfg);
        one.checks.front().id += "." + e.name;
        report.checks.push_back(one.checks.front());
      }
    } else if (kind == "involution") {
      for (const auto& e : corpus) {
        if (!e.body.bounded() || !e.body.has_interior()) continue;
        const GridBody twice = dual_map(d, dual_map(d, e.body));
        report.add("duality.involution." + e.name, "applying the duality twice returns the body",
                   hausdorff_on_truncations(twice, e.body), 40.0 * ctx->cfg.tau(e.body));
      }
    } else if (kind == "order") {
      for (const auto& e : corpus) {
        if (!e.body.bounded() || !e.body.has_interior()) continue;
        const GridBody big = dual_map(d, scale(e.body, 0.75));
        const GridBody small = dual_map(d, e.body);
        double excess = 0.0;
        for (int i = 0; i < big.size(); ++i) {
          if (is_inf(big.support()[i])) continue;
          excess = std::max(excess, small.support()[i] - big.support()[i]);
        }
        report.add("duality.order." + e.name, "dualities reverse inclusion", excess,
                   ctx->cfg.tau(e.body));
      }
    } else {
      throw Error(ErrorCode::kBadParameter, "check must be conj, involution or order");
    }
    *json_out = dup_string(emit(report, EmitFormat::kJson));
  });
}

plab_status plab_verify(plab_context* ctx, const char* format, int with_timestamp,
                        char** text_out, int* all_passed) {
  if (!ctx || !format || !text_out || !all_passed) return PLAB_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    const EmitFormat fmt = parse_format(format);
    const auto started = std::chrono::steady_clock::now();
    Report report = run_verify(ctx->cfg);
    const auto finished = std::chrono::steady_clock::now();
    if (with_timestamp) {
      report.runtime_ms =
          std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(finished - started)
              .count();
      const auto now = std::chrono::system_clock::now();
      const std::time_t tt = std::chrono::system_clock::to_time_t(now);
      char buf[64];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
      report.timestamp = buf;
    }
    *text_out = dup_string(emit(report, fmt));
    *all_passed = report.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
