#pragma once

#include "core/config.hpp"
#include "core/corpus.hpp"
#include "core/report.hpp"

namespace polarlab {

/// Runs every module's invariant rows against the corpus; one check row per
/// invariant, aggregated over the applicable corpus members.
Report run_verify(const std::vector<CorpusEntry>& corpus, const Config& cfg);

/// Same over the built-in 12-body corpus.
Report run_verify(const Config& cfg);

}  // namespace polarlab
