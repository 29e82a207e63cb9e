#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lincomp/ident_engine.hpp"

namespace lincomp {

struct SweepSummary {
  int max_n = 0;
  std::vector<std::size_t> trees_per_n;   // index n - 1
  std::vector<std::size_t> models_per_n;  // index n - 1
  std::size_t models = 0;
  std::size_t identifiable = 0;
  std::vector<std::string> disagreements;  // model JSON, one line each
};

/// Every labeled tree on n <= max_n vertices, every (in, out) pair and every
/// leak set of size <= max_leaks: the tree-theorem verdict against the
/// Jacobian-rank verdict.
SweepSummary sweep_trees(int max_n, const AnalysisOptions& opts, int max_leaks = 2);
std::string sweep_json(const SweepSummary& s, int indent = 2);

struct SelftestCheck {
  std::string name;
  int passed = 0;
  int failed = 0;
};

struct SelftestSummary {
  std::uint64_t seed = 0;
  int trials = 0;
  int random_models = 0;
  std::vector<SelftestCheck> checks;
  std::vector<std::string> failures;  // "check: model json"

  bool ok() const { return failures.empty(); }
};

/// Random strongly connected models (n <= 5) plus the reference models:
/// forest vs determinant coefficients, coefficient counts and constant
/// values, determinant identities, the multigraph right-hand side,
/// soundness of the structural shortcuts, and the leaf rank relations.
/// Fully determined by (seed, trials, random_models).
SelftestSummary selftest(std::uint64_t seed, int trials, int random_models = 40);
std::string selftest_json(const SelftestSummary& s, int indent = 2);

}  // namespace lincomp
