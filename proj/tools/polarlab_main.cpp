// polarlab command line: body calculus, truncation metrics, the geometric
// mean, the polar-equivariant contraction, fixed-point families and the full
// verification suite. Talks to the library exclusively through its C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polarlab/polarlab.h"

namespace {

struct ContextDeleter {
  void operator()(plab_context* c) const { plab_context_free(c); }
};
struct BodyDeleter {
  void operator()(plab_body* b) const { plab_body_free(b); }
};
using ContextPtr = std::unique_ptr<plab_context, ContextDeleter>;
using BodyPtr = std::unique_ptr<plab_body, BodyDeleter>;

struct GlobalOptions {
  int grid_n = 0;
  uint64_t seed = 42;
  bool seed_given = false;
  double tol_grid = 0.0;
  std::string format = "json";
  bool no_timestamp = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void fail(const ContextPtr& ctx, plab_status status, const char* what) {
  std::cerr << "error: " << what << " (status " << status << ")";
  const char* detail = plab_context_last_error(ctx.get());
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  std::exit(2);
}

ContextPtr make_context(const GlobalOptions& opts) {
  uint64_t seed = opts.seed;
  if (!opts.seed_given) {
    if (const char* env = std::getenv("POLARLAB_SEED")) seed = std::strtoull(env, nullptr, 10);
  }
  ContextPtr ctx(plab_context_new(2, opts.grid_n, seed));
  if (!ctx) {
    std::cerr << "error: invalid grid configuration\n";
    std::exit(2);
  }
  if (opts.tol_grid > 0.0) plab_context_set_tolerance(ctx.get(), opts.tol_grid);
  return ctx;
}

BodyPtr parse_body_file(const ContextPtr& ctx, const std::string& path) {
  const std::string text = read_file(path);
  plab_body* raw = nullptr;
  const plab_status st = plab_body_parse(ctx.get(), text.c_str(), &raw);
  if (st != PLAB_OK) fail(ctx, st, ("parsing " + path).c_str());
  return BodyPtr(raw);
}

void print_and_free(char* text) {
  std::cout << text;
  plab_string_free(text);
}

std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

// "start:end:step", inclusive of both ends up to rounding.
std::vector<double> parse_grid(const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) return parse_list(spec);
  const double start = std::stod(spec.substr(0, c1));
  const double end = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(spec.substr(c2 + 1));
  std::vector<double> out;
  if (!(step > 0.0)) return out;
  for (double t = start; t <= end + 1e-12; t += step) out.push_back(t);
  return out;
}

std::vector<double> parse_matrix(const std::string& text) {
  // Minimal [[a,b],[c,d]] reader; full JSON bodies go through the library.
  std::vector<double> entries;
  std::string token;
  for (char c : text) {
    if ((c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E') {
      token += c;
    } else if (!token.empty()) {
      entries.push_back(std::stod(token));
      token.clear();
    }
  }
  if (!token.empty()) entries.push_back(std::stod(token));
  if (entries.size() != 4) throw CLI::ValidationError("expected a 2x2 matrix like [[1,0],[0,-1]]");
  return entries;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polarlab: polar duality, truncation metrics and contraction toolkit"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--grid-n", opts.grid_n, "number of grid directions (0 = default 1440)");
  auto* seed_opt = app.add_option("--seed", opts.seed, "seed for randomized corpus members");
  app.add_option("--tol-grid", opts.tol_grid, "absolute grid tolerance override");
  app.add_option("--format", opts.format, "report format: json|csv|human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_flag("--no-timestamp", opts.no_timestamp, "omit timestamp and runtime from reports");

  // polar
  std::string polar_body;
  auto* cmd_polar = app.add_subcommand("polar", "polar set of a body");
  cmd_polar->add_option("--body", polar_body, "body JSON file")->required();

  // metrics
  std::string met_a, met_b;
  double met_eps = 0.0;
  auto* cmd_metrics = app.add_subcommand("metrics", "Hausdorff and Attouch-Wets distances");
  cmd_metrics->add_option("--a", met_a, "first body JSON file")->required();
  cmd_metrics->add_option("--b", met_b, "second body JSON file")->required();
  cmd_metrics->add_option("--eps", met_eps, "also run the threshold equivalence at eps");

  // mean
  std::string mean_a, mean_b;
  double mean_tol = 1e-6;
  auto* cmd_mean = app.add_subcommand("mean", "geometric mean of two bodies");
  cmd_mean->add_option("--a", mean_a, "first body JSON file")->required();
  cmd_mean->add_option("--b", mean_b, "second body JSON file")->required();
  cmd_mean->add_option("--tol", mean_tol, "stopping gap");

  // contract
  std::string con_body, con_grid = "0:1:0.05", con_bodies_out;
  double con_tol = 1e-6;
  auto* cmd_contract = app.add_subcommand("contract", "polar-equivariant contraction sweep");
  cmd_contract->add_option("--a", con_body, "body JSON file")->required();
  cmd_contract->add_option("--t-grid", con_grid, "t values as start:end:step or a comma list");
  cmd_contract->add_option("--tol", con_tol, "mean stopping gap");
  cmd_contract->add_option("--bodies-out", con_bodies_out, "write contracted bodies JSON here");

  // fixpoints
  std::string fix_matrix, fix_ts = "0.1,0.2,0.3";
  double fix_tol = 1e-6;
  auto* cmd_fix = app.add_subcommand("fixpoints", "fixed-point family of an indefinite duality");
  cmd_fix->add_option("--matrix", fix_matrix, "symmetric 2x2 matrix, e.g. [[1,0],[0,-1]]")
      ->required();
  cmd_fix->add_option("--t", fix_ts, "comma-separated t values in (0,1)");
  cmd_fix->add_option("--tol", fix_tol, "mean stopping gap");

  // duality
  std::string dual_matrix, dual_check = "conj";
  auto* cmd_dual = app.add_subcommand("duality", "checks for f(A) = T(polar A)");
  cmd_dual->add_option("--matrix", dual_matrix, "symmetric 2x2 matrix")->required();
  cmd_dual->add_option("--check", dual_check, "conj|involution|order")
      ->check(CLI::IsMember({"conj", "involution", "order"}));

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the full property suite");

  CLI11_PARSE(app, argc, argv);
  opts.seed_given = seed_opt->count() > 0;
  ContextPtr ctx = make_context(opts);

  if (app.got_subcommand(cmd_polar)) {
    BodyPtr body = parse_body_file(ctx, polar_body);
    plab_body* out = nullptr;
    if (plab_status st = plab_polar(body.get(), &out); st != PLAB_OK) fail(ctx, st, "polar");
    BodyPtr polar(out);
    char* json = nullptr;
    if (plab_status st = plab_body_to_json(polar.get(), &json); st != PLAB_OK)
      fail(ctx, st, "serializing");
    print_and_free(json);
    std::cout << "\n";
    return 0;
  }

  if (app.got_subcommand(cmd_metrics)) {
    BodyPtr a = parse_body_file(ctx, met_a);
    BodyPtr b = parse_body_file(ctx, met_b);
    char* json = nullptr;
    if (plab_status st = plab_metrics_report(ctx.get(), a.get(), b.get(), met_eps, &json);
        st != PLAB_OK)
      fail(ctx, st, "metrics");
    print_and_free(json);
    return 0;
  }

  if (app.got_subcommand(cmd_mean)) {
    BodyPtr a = parse_body_file(ctx, mean_a);
    BodyPtr b = parse_body_file(ctx, mean_b);
    plab_body* final_body = nullptr;
    char* trace = nullptr;
    if (plab_status st =
            plab_geometric_mean(ctx.get(), a.get(), b.get(), mean_tol, 0, &final_body, &trace);
        st != PLAB_OK)
      fail(ctx, st, "mean");
    BodyPtr final_guard(final_body);
    print_and_free(trace);
    char* json = nullptr;
    if (plab_status st = plab_body_to_json(final_guard.get(), &json); st != PLAB_OK)
      fail(ctx, st, "serializing");
    print_and_free(json);
    std::cout << "\n";
    return 0;
  }

  if (app.got_subcommand(cmd_contract)) {
    BodyPtr a = parse_body_file(ctx, con_body);
    const std::vector<double> ts = parse_grid(con_grid);
    char* csv = nullptr;
    char* bodies = nullptr;
    if (plab_status st = plab_contract_report(ctx.get(), a.get(), ts.data(), ts.size(), con_tol,
                                              &csv, con_bodies_out.empty() ? nullptr : &bodies);
        st != PLAB_OK)
      fail(ctx, st, "contract");
    print_and_free(csv);
    if (bodies) {
      std::ofstream out(con_bodies_out, std::ios::binary);
      out << bodies;
      plab_string_free(bodies);
    }
    return 0;
  }

  if (app.got_subcommand(cmd_fix)) {
    const std::vector<double> m = parse_matrix(fix_matrix);
    const std::vector<double> ts = parse_list(fix_ts);
    char* json = nullptr;
    if (plab_status st =
            plab_fixpoints_report(ctx.get(), m.data(), ts.data(), ts.size(), fix_tol, &json);
        st != PLAB_OK)
      fail(ctx, st, "fixpoints");
    print_and_free(json);
    return 0;
  }

  if (app.got_subcommand(cmd_dual)) {
    const std::vector<double> m = parse_matrix(dual_matrix);
    char* json = nullptr;
    if (plab_status st = plab_duality_report(ctx.get(), m.data(), dual_check.c_str(), &json);
        st != PLAB_OK)
      fail(ctx, st, "duality");
    print_and_free(json);
    return 0;
  }

  if (app.got_subcommand(cmd_verify)) {
    char* text = nullptr;
    int all_passed = 0;
    if (plab_status st =
            plab_verify(ctx.get(), opts.format.c_str(), opts.no_timestamp ? 0 : 1, &text,
                        &all_passed);
        st != PLAB_OK)
      fail(ctx, st, "verify");
    print_and_free(text);
    return all_passed ? 0 : 1;
  }

  return 2;
}
