#pragma once

#include <optional>
#include <vector>

#include "kmetric/report.hpp"

namespace kmetric {

struct CorpusOptions {
  std::optional<TheoremId> only;
  long node_budget = kDefaultNodeBudget;
  int threads = 1;
};

// Curated instances exercising every statement in the catalog against the
// exact solver: closed forms across their small ranges, the corona bounds and
// equalities on fixed families, and the complement / joined-family variants.
std::vector<TheoremReport> run_verification_corpus(const CorpusOptions& opts);

}  // namespace kmetric
