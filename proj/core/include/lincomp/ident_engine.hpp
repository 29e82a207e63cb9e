#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lincomp/model.hpp"
#include "lincomp/polynomial.hpp"

namespace lincomp {

/// Raised when a verdict is requested for a model outside the scope of the
/// identifiability definition (not strongly connected).
class AnalysisRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoefficientEntry {
  std::string label;  // e.g. "y1.c2", "y1.u3.d0"
  Polynomial poly;
};

/// The non-constant input-output coefficients as functions of the parameters.
/// Order: per output (ascending), c_{n-1}..c_0, then for each input
/// (ascending) d_{n-1}..d_0, skipping constants. Left-hand coefficients are
/// repeated for every output.
struct CoefficientMap {
  ParamVector params;
  std::vector<CoefficientEntry> coeffs;

  std::size_t p() const { return params.size(); }
  std::size_t m() const { return coeffs.size(); }
};

/// Built from the forest formulas. Throws std::invalid_argument if the model
/// has no inputs.
CoefficientMap coefficient_map(const Model& m);

struct RankTrial {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
};

struct RankReport {
  std::size_t rank = 0;  // max over trials
  std::vector<RankTrial> trials;
  std::size_t p = 0;
  std::size_t m = 0;
};

/// Rank of the Jacobian of `cm` at random points. Trial t uses prime
/// kTrialPrimes[t % 3] and a std::mt19937_64 seeded with seed + t; parameter
/// values are uniform in [1, prime - 1]. Evaluation can only lose rank, so
/// the maximum is a lower bound of the generic rank that is exact unless
/// every trial hits the zero set of all maximal minors.
RankReport generic_rank(const CoefficientMap& cm, int trials, std::uint64_t seed);

enum class Status { Identifiable, Unidentifiable, NoParameters };
enum class Method { JacobianRank, CountCriterion, TreeTheorem, ISCTheorem, Convention };

std::string to_string(Status s);  // "identifiable", "unidentifiable", "no_parameters"
std::string to_string(Method m);  // "jacobian_rank", "count_criterion", ...

struct Verdict {
  Status status = Status::Unidentifiable;
  Method method = Method::JacobianRank;
  std::string evidence;              // one-line human summary
  std::optional<RankReport> rank;    // set when method is JacobianRank

  bool identifiable() const { return status != Status::Unidentifiable; }
};

struct AnalysisOptions {
  int trials = 3;
  std::uint64_t seed = 20240101;
  /// Skip the structural shortcuts and decide by Jacobian rank.
  bool force_rank = false;
};

/// Parameter-count threshold of the unidentifiability criterion for a
/// strongly connected model with one input and one output: 2n-1, 2n-L,
/// 2n-2 or 2n-L-1 depending on leaks and on whether in = out (L = dist).
int count_criterion_bound(const Model& m);

/// Fires (returns Unidentifiable) iff p exceeds count_criterion_bound.
/// Throws std::invalid_argument unless the model is strongly connected with
/// one input and one output.
std::optional<Verdict> count_criterion(const Model& m);

/// For bidirectional tree models with one input and one output: identifiable
/// iff dist(in, out) <= 1 and |Leak| <= 1. Throws std::invalid_argument
/// outside that class.
Verdict classify_tree(const Model& m);

/// Identifiable when In = Out = {i}, |Leak| <= 1, |E| = 2n - 2 and G is
/// inductively strongly connected with respect to i; nothing otherwise.
std::optional<Verdict> isc_sufficiency(const Model& m);

struct DimReport {
  std::size_t image_dim = 0;
  std::size_t expected = 0;  // min(p, m)
  bool has_expected_dimension = false;
};

DimReport expected_dimension(const Model& m, const AnalysisOptions& opts = {});
DimReport dimension_from_rank(const RankReport& r);

/// Shortcut pipeline: no parameters -> count criterion -> tree theorem ->
/// inductively strongly connected -> Jacobian rank. Throws AnalysisRefused
/// for models that are not strongly connected and std::invalid_argument for
/// models without inputs.
Verdict decide_identifiability(const Model& m, const AnalysisOptions& opts = {});

/// What each structural criterion says about a model, for reports.
struct CriteriaReport {
  bool count_applies = false;
  bool count_fires = false;
  int count_bound = 0;
  bool tree_applies = false;
  bool tree_identifiable = false;
  std::optional<int> distance;  // dist(in, out) for single in/out models
  bool isc_applies = false;
  bool isc_fires = false;
  std::vector<int> isc_order;
};

CriteriaReport evaluate_criteria(const Model& m);

struct Analysis {
  Verdict verdict;
  RankReport rank;
  DimReport dimension;
  CriteriaReport criteria;
};

/// Verdict plus the Jacobian rank (always computed) and criterion data.
Analysis analyze(const Model& m, const AnalysisOptions& opts = {});

/// JSON report with keys verdict, method, rank, params, coeffs, trials,
/// criteria, dimension. Primes are strings.
std::string analysis_json(const Analysis& a, int indent = 2);

}  // namespace lincomp
