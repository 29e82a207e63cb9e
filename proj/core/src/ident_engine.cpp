#include "lincomp/ident_engine.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lincomp/forestcalc.hpp"

namespace lincomp {

CoefficientMap coefficient_map(const Model& m) {
  if (m.inputs().empty()) {
    throw std::invalid_argument("model has no inputs");
  }
  CoefficientMap cm;
  cm.params = param_vector(m);
  const int n = m.n();
  const auto c = lhs_coefficients(m);
  for (int out : m.outputs()) {
    const std::string y = "y" + std::to_string(out);
    for (int k = n - 1; k >= 0; --k) {
      if (c[k].is_constant()) continue;
      cm.coeffs.push_back({y + ".c" + std::to_string(k), c[k]});
    }
    for (int in : m.inputs()) {
      const auto rhs = rhs_coefficients(m, out, in);
      const std::string u = y + ".u" + std::to_string(in);
      for (int k = n - 1; k >= 0; --k) {
        if (rhs.d[k].is_constant()) continue;
        cm.coeffs.push_back({u + ".d" + std::to_string(k), rhs.d[k]});
      }
    }
  }
  return cm;
}

RankReport generic_rank(const CoefficientMap& cm, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  RankReport report;
  report.p = cm.p();
  report.m = cm.m();

  // Symbolic Jacobian, one row per coefficient.
  std::vector<std::vector<Polynomial>> jac(cm.m());
  for (std::size_t r = 0; r < cm.m(); ++r) {
    for (const Param& x : cm.params) {
      jac[r].push_back(partial_derivative(cm.coeffs[r].poly, x));
    }
  }

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t prime = kTrialPrimes[t % 3];
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(trial_seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, prime - 1);
    FieldPoint pt;
    pt.prime = prime;
    for (const Param& x : cm.params) pt.values[x] = dist(rng);

    std::vector<std::vector<std::uint64_t>> rows(cm.m(),
                                                 std::vector<std::uint64_t>(cm.p()));
    for (std::size_t r = 0; r < cm.m(); ++r) {
      for (std::size_t c = 0; c < cm.p(); ++c) {
        rows[r][c] = eval_mod(jac[r][c], pt);
      }
    }
    const std::size_t rank = rank_mod(std::move(rows), PrimeField(prime));
    report.trials.push_back({prime, trial_seed, rank});
    report.rank = std::max(report.rank, rank);
  }
  return report;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Identifiable: return "identifiable";
    case Status::Unidentifiable: return "unidentifiable";
    case Status::NoParameters: return "no_parameters";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::JacobianRank: return "jacobian_rank";
    case Method::CountCriterion: return "count_criterion";
    case Method::TreeTheorem: return "tree_theorem";
    case Method::ISCTheorem: return "isc_theorem";
    case Method::Convention: return "convention";
  }
  return "?";
}

namespace {

bool single_in_out(const Model& m) {
  return m.inputs().size() == 1 && m.outputs().size() == 1;
}

void require_single_sc(const Model& m, const char* what) {
  if (!single_in_out(m)) {
    throw std::invalid_argument(std::string(what) + " needs one input and one output");
  }
  if (!is_strongly_connected(m)) {
    throw std::invalid_argument(std::string(what) + " needs a strongly connected model");
  }
}

}  // namespace

int count_criterion_bound(const Model& m) {
  require_single_sc(m, "count criterion");
  const int n = m.n();
  const int in = m.inputs().front();
  const int out = m.outputs().front();
  const bool leaky = !m.leaks().empty();
  if (in == out) return leaky ? 2 * n - 1 : 2 * n - 2;
  const int dist = *distance(m, in, out);
  return leaky ? 2 * n - dist : 2 * n - dist - 1;
}

std::optional<Verdict> count_criterion(const Model& m) {
  const int bound = count_criterion_bound(m);
  const auto p = static_cast<int>(m.param_count());
  if (p <= bound) return std::nullopt;
  Verdict v;
  v.status = Status::Unidentifiable;
  v.method = Method::CountCriterion;
  v.evidence = "parameters " + std::to_string(p) + " > " + std::to_string(bound) +
               " non-constant coefficients";
  return v;
}

Verdict classify_tree(const Model& m) {
  if (!single_in_out(m) || !is_bidirectional_tree(m)) {
    throw std::invalid_argument(
        "tree classification needs a bidirectional tree with one input and one output");
  }
  const int dist = *distance(m, m.inputs().front(), m.outputs().front());
  const auto leaks = m.leaks().size();
  Verdict v;
  v.method = Method::TreeTheorem;
  v.status = dist <= 1 && leaks <= 1 ? Status::Identifiable : Status::Unidentifiable;
  v.evidence = "tree model, dist(in,out) = " + std::to_string(dist) +
               ", leaks = " + std::to_string(leaks);
  return v;
}

namespace {

// In = Out = {i}, |Leak| <= 1 and |E| = 2n - 2. The edge count matters: an
// inductively strongly connected graph has at least 2n - 2 edges, and with
// more (e.g. the complete digraph with one leak) the model can be
// unidentifiable.
bool isc_hypotheses(const Model& m) {
  return single_in_out(m) && m.inputs() == m.outputs() && m.leaks().size() <= 1 &&
         m.edges().size() == 2 * static_cast<std::size_t>(m.n() - 1);
}

}  // namespace

std::optional<Verdict> isc_sufficiency(const Model& m) {
  if (!isc_hypotheses(m)) return std::nullopt;
  const auto order = inductively_strongly_connected_order(m, m.inputs().front());
  if (!order) return std::nullopt;
  Verdict v;
  v.status = Status::Identifiable;
  v.method = Method::ISCTheorem;
  std::ostringstream os;
  os << "inductively strongly connected order";
  for (std::size_t k = 0; k < order->size(); ++k) os << (k ? "," : " ") << (*order)[k];
  v.evidence = os.str();
  return v;
}

DimReport dimension_from_rank(const RankReport& r) {
  DimReport d;
  d.image_dim = r.rank;
  d.expected = std::min(r.p, r.m);
  d.has_expected_dimension = d.image_dim == d.expected;
  return d;
}

DimReport expected_dimension(const Model& m, const AnalysisOptions& opts) {
  return dimension_from_rank(generic_rank(coefficient_map(m), opts.trials, opts.seed));
}

namespace {

Verdict rank_verdict(const RankReport& r) {
  Verdict v;
  v.method = Method::JacobianRank;
  v.status = r.rank == r.p ? Status::Identifiable : Status::Unidentifiable;
  v.evidence = "Jacobian rank " + std::to_string(r.rank) + " with " +
               std::to_string(r.p) + " parameters";
  v.rank = r;
  return v;
}

Verdict decide(const Model& m, const AnalysisOptions& opts,
               const RankReport* precomputed) {
  if (m.inputs().empty()) {
    throw std::invalid_argument("model has no inputs");
  }
  if (!is_strongly_connected(m)) {
    throw AnalysisRefused("model is not strongly connected; no verdict is defined");
  }
  if (m.param_count() == 0) {
    Verdict v;
    v.status = Status::NoParameters;
    v.method = Method::Convention;
    v.evidence = "no parameters";
    return v;
  }
  if (!opts.force_rank) {
    if (single_in_out(m)) {
      if (auto v = count_criterion(m)) return *v;
      if (is_bidirectional_tree(m)) return classify_tree(m);
    }
    if (auto v = isc_sufficiency(m)) return *v;
  }
  if (precomputed) return rank_verdict(*precomputed);
  return rank_verdict(generic_rank(coefficient_map(m), opts.trials, opts.seed));
}

}  // namespace

Verdict decide_identifiability(const Model& m, const AnalysisOptions& opts) {
  return decide(m, opts, nullptr);
}

CriteriaReport evaluate_criteria(const Model& m) {
  CriteriaReport c;
  const bool sc = is_strongly_connected(m);
  if (single_in_out(m)) {
    c.distance = distance(m, m.inputs().front(), m.outputs().front());
    if (sc) {
      c.count_applies = true;
      c.count_bound = count_criterion_bound(m);
      c.count_fires = static_cast<int>(m.param_count()) > c.count_bound;
    }
    if (is_bidirectional_tree(m)) {
      c.tree_applies = true;
      c.tree_identifiable = classify_tree(m).status == Status::Identifiable;
    }
  }
  if (isc_hypotheses(m)) {
    c.isc_applies = true;
    if (auto order = inductively_strongly_connected_order(m, m.inputs().front())) {
      c.isc_fires = true;
      c.isc_order = *order;
    }
  }
  return c;
}

Analysis analyze(const Model& m, const AnalysisOptions& opts) {
  if (m.inputs().empty()) {
    throw std::invalid_argument("model has no inputs");
  }
  if (!is_strongly_connected(m)) {
    throw AnalysisRefused("model is not strongly connected; no verdict is defined");
  }
  Analysis a;
  a.rank = generic_rank(coefficient_map(m), opts.trials, opts.seed);
  a.dimension = dimension_from_rank(a.rank);
  a.criteria = evaluate_criteria(m);
  a.verdict = decide(m, opts, &a.rank);
  return a;
}

std::string analysis_json(const Analysis& a, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["verdict"] = to_string(a.verdict.status);
  doc["method"] = to_string(a.verdict.method);
  doc["rank"] = a.rank.rank;
  doc["params"] = a.rank.p;
  doc["coeffs"] = a.rank.m;
  auto trials = ordered_json::array();
  for (const auto& t : a.rank.trials) {
    ordered_json jt;
    jt["prime"] = std::to_string(t.prime);
    jt["seed"] = t.seed;
    jt["rank"] = t.rank;
    trials.push_back(std::move(jt));
  }
  doc["trials"] = std::move(trials);

  const CriteriaReport& c = a.criteria;
  ordered_json crit;
  crit["distance"] = c.distance ? ordered_json(*c.distance) : ordered_json(nullptr);
  crit["count_criterion"] = {
      {"applies", c.count_applies},
      {"fires", c.count_fires},
      {"bound", c.count_applies ? ordered_json(c.count_bound) : ordered_json(nullptr)}};
  crit["tree_theorem"] = {{"applies", c.tree_applies},
                          {"identifiable", c.tree_identifiable}};
  crit["isc_theorem"] = {
      {"applies", c.isc_applies}, {"fires", c.isc_fires}, {"order", c.isc_order}};
  doc["criteria"] = std::move(crit);

  doc["dimension"] = {{"image_dim", a.dimension.image_dim},
                      {"expected", a.dimension.expected},
                      {"has_expected_dimension", a.dimension.has_expected_dimension}};
  doc["evidence"] = a.verdict.evidence;
  return doc.dump(indent);
}

}  // namespace lincomp
