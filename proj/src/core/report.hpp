#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polarlab {

struct Config;

/// One verified property: pass holds exactly when residual <= tolerance.
struct CheckRow {
  std::string id;
  std::string property;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

/// Machine-readable outcome of a property run.
struct Report {
  std::string scenario;
  std::vector<CheckRow> checks;
  double runtime_ms = 0.0;
  int dimension = 2;
  int grid_n = 0;
  std::uint64_t seed = 0;
  std::optional<double> tau_override;
  std::string timestamp;  // empty when suppressed

  void add(const std::string& id, const std::string& property, double residual, double tolerance,
           const std::string& detail = "");
  /// A boolean check: residual 0/1 against tolerance 0.
  void add_flag(const std::string& id, const std::string& property, bool ok,
                const std::string& detail = "");
  void echo_config(const Config& cfg);

  bool all_pass() const;
  int failed_count() const;
};

enum class EmitFormat { kJson, kCsv, kHuman };

EmitFormat parse_format(const std::string& name);

/// Deterministic serialization; exact numeric round-trip through JSON.
std::string emit(const Report& report, EmitFormat format);

/// Inverse of emit(.., kJson).
Report parse_report_json(const std::string& text);

}  // namespace polarlab
