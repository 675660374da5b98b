#pragma once

#include <string>
#include <vector>

#include "core/body.hpp"
#include "core/config.hpp"
#include "core/polytope2.hpp"

namespace polarlab {

struct CorpusEntry {
  std::string name;
  GridBody body;
  std::optional<Polytope2> exact;
};

/// The built-in 12-body corpus spanning every stratum the theory
/// distinguishes: compact with interior, compact without interior, unbounded
/// with interior, unbounded degenerate, and the singleton {0}.
std::vector<CorpusEntry> builtin_corpus(const Config& cfg);

/// Seeded convex polygon with 0 interior, vertices in strict convex position.
Polytope2 random_polygon(std::uint64_t seed);

/// Seeded bounded body with 0 interior (used by randomized property rows).
GridBody random_interior_body(const Config& cfg, std::uint64_t seed);

/// Seeded body from any stratum, possibly unbounded or degenerate.
GridBody random_any_body(const Config& cfg, std::uint64_t seed);

}  // namespace polarlab
