#pragma once

#include <string>
#include <vector>

#include "icol/json_io.hpp"

namespace icol {

struct CorpusCheckResult {
  std::string name;
  bool pass = false;
  Json details;  // per-check counters and any counterexample dumps
};

struct CorpusReport {
  std::vector<CorpusCheckResult> checks;
  bool all_pass = true;
};

// Runs the checks listed in a manifest document {"checks": [{"name": ...,
// ...params...}, ...]}. Known names: small-graphs, extremal, certificates,
// decomposition, lemma2, splitting, alpha-coherence. Unknown names produce a
// failing entry. An empty manifest passes vacuously.
CorpusReport run_corpus(const Json& manifest);

Json corpus_report_to_json(const CorpusReport& r);

}  // namespace icol
