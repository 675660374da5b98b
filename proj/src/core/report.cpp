#include "core/report.hpp"

#include <cmath>
#include <sstream>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "json.hpp"

namespace polarlab {

namespace {

using nlohmann::json;

json number_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
  return json(x);
}

double from_number_or_inf(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw Error(ErrorCode::kParseError, "expected number or \"inf\"");
  }
  return j.get<double>();
}

}  // namespace

void Report::add(const std::string& id, const std::string& property, double residual,
                 double tolerance, const std::string& detail) {
  checks.push_back({id, property, residual, tolerance, residual <= tolerance, detail});
}

void Report::add_flag(const std::string& id, const std::string& property, bool ok,
                      const std::string& detail) {
  checks.push_back({id, property, ok ? 0.0 : 1.0, 0.0, ok, detail});
}

void Report::echo_config(const Config& cfg) {
  dimension = cfg.dimension;
  grid_n = cfg.effective_n();
  seed = cfg.seed;
  tau_override = cfg.tau_override;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int Report::failed_count() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

EmitFormat parse_format(const std::string& name) {
  if (name == "json") return EmitFormat::kJson;
  if (name == "csv") return EmitFormat::kCsv;
  if (name == "human") return EmitFormat::kHuman;
  throw Error(ErrorCode::kBadParameter, "unknown format: " + name);
}

std::string emit(const Report& r, EmitFormat format) {
  if (format == EmitFormat::kJson) {
    json j;
    j["scenario"] = r.scenario;
    j["config"] = {{"dimension", r.dimension},
                   {"grid_n", r.grid_n},
                   {"seed", r.seed},
                   {"tau_override", r.tau_override ? json(*r.tau_override) : json(nullptr)}};
    json rows = json::array();
    for (const auto& c : r.checks) {
      rows.push_back({{"id", c.id},
                      {"property", c.property},
                      {"residual", number_or_inf(c.residual)},
                      {"tolerance", number_or_inf(c.tolerance)},
                      {"pass", c.pass},
                      {"detail", c.detail}});
    }
    j["checks"] = rows;
    j["passed"] = static_cast<int>(r.checks.size()) - r.failed_count();
    j["failed"] = r.failed_count();
    j["all_pass"] = r.all_pass();
    if (!r.timestamp.empty()) {
      j["timestamp"] = r.timestamp;
      j["runtime_ms"] = r.runtime_ms;
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  if (format == EmitFormat::kCsv) {
    out << "id,property,residual,tolerance,pass\n";
    for (const auto& c : r.checks) {
      out << c.id << ',' << c.property << ',' << c.residual << ',' << c.tolerance << ','
          << (c.pass ? "true" : "false") << '\n';
    }
    return out.str();
  }

  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.property
        << "  residual=" << c.residual << " tol=" << c.tolerance;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << (r.all_pass() ? "all checks passed" : "FAILURES: ") ;
  if (!r.all_pass()) out << r.failed_count() << " of " << r.checks.size();
  out << '\n';
  return out.str();
}

Report parse_report_json(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.scenario = j.at("scenario").get<std::string>();
  r.dimension = j.at("config").at("dimension").get<int>();
  r.grid_n = j.at("config").at("grid_n").get<int>();
  r.seed = j.at("config").at("seed").get<std::uint64_t>();
  if (!j.at("config").at("tau_override").is_null())
    r.tau_override = j.at("config").at("tau_override").get<double>();
  for (const auto& row : j.at("checks")) {
    CheckRow c;
    c.id = row.at("id").get<std::string>();
    c.property = row.at("property").get<std::string>();
    c.residual = from_number_or_inf(row.at("residual"));
    c.tolerance = from_number_or_inf(row.at("tolerance"));
    c.pass = row.at("pass").get<bool>();
    c.detail = row.at("detail").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  if (j.contains("timestamp")) {
    r.timestamp = j.at("timestamp").get<std::string>();
    r.runtime_ms = j.at("runtime_ms").get<double>();
  }
  return r;
}

}  // namespace polarlab
