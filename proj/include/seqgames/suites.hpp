#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqgames/composition.hpp"

namespace seqgames {

struct CheckResult {
  std::string suite;
  std::string diagram;
  std::string game_label;
  int depth = 0;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  std::string error;  // nonempty when the check itself failed to run
  std::string note;
};

struct SuiteOptions {
  int depth = kDefaultDepth;
  int budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::vector<GameExpr> corpus;
};

/// The fixed default corpus the law suites run over.
std::vector<GameExpr> default_corpus();

/// All suite names, in the order `check --suite all` runs them.
std::vector<std::string> suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_law_suite(const std::string& suite,
                                       const SuiteOptions& opts);

/// One line per diagram: PASS|FAIL <suite>/<diagram> depth=<d> game=<expr>.
std::string format_report(const std::vector<CheckResult>& results);
/// The same fields as a JSON array (machine-readable variant).
std::string report_json(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

/// Deterministic perturbation of a strategy: changes the response at the
/// k-th reachable O-position (exploration order).  Used to exercise
/// uniqueness and cofreeness rejections.
Strategy perturb_strategy(const Strategy& s, int position_index, int depth);

}  // namespace seqgames
