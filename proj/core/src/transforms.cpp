#include "lincomp/transforms.hpp"

#include <stdexcept>

#include "lincomp/forestcalc.hpp"

namespace lincomp {

std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::AddLeafEdge: return "add-leaf";
    case TransformKind::AddLeafMoveOutput: return "add-leaf-move-output";
    case TransformKind::AddLeafMoveInput: return "add-leaf-move-input";
    case TransformKind::AddLeak: return "add-leak";
    case TransformKind::RemoveLeak: return "remove-leak";
  }
  return "?";
}

TransformKind parse_transform_kind(const std::string& name) {
  for (auto k : {TransformKind::AddLeafEdge, TransformKind::AddLeafMoveOutput,
                 TransformKind::AddLeafMoveInput, TransformKind::AddLeak,
                 TransformKind::RemoveLeak}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown transform '" + name + "'");
}

std::string to_string(Guarantee g) {
  switch (g) {
    case Guarantee::None: return "none";
    case Guarantee::PreservesIdentifiability: return "preserves_identifiability";
    case Guarantee::PreservesExpectedDimension: return "preserves_expected_dimension";
    case Guarantee::Both: return "both";
    case Guarantee::Iff: return "iff";
  }
  return "?";
}

namespace {

void check_at(const Model& m, int at) {
  if (at < 1 || at > m.n()) {
    throw ModelError("at", "compartment " + std::to_string(at) + " out of range 1.." +
                               std::to_string(m.n()));
  }
}

Model with_leaf(const Model& m, int at, std::vector<int> in, std::vector<int> out) {
  const int leaf = m.n() + 1;
  std::vector<Edge> edges = m.edges();
  edges.push_back({at, leaf});
  edges.push_back({leaf, at});
  return Model(leaf, std::move(edges), std::move(in), std::move(out), m.leaks());
}

std::string relabel_note(int at, int theorem_at) {
  if (at == theorem_at) return "";
  return "compartments " + std::to_string(at) + " and " + std::to_string(theorem_at) +
         " swap roles relative to the theorem statement";
}

TransformResult leaf_move(const Model& m, int at, bool move_output) {
  check_at(m, at);
  const int leaf = m.n() + 1;
  TransformResult r{move_output ? with_leaf(m, at, m.inputs(), {leaf})
                                : with_leaf(m, at, {leaf}, m.outputs()),
                    Guarantee::None, "", ""};
  const bool base = is_strongly_connected(m) && m.inputs() == std::vector<int>{at} &&
                    m.outputs() == std::vector<int>{at} && leaf >= 3;
  if (!base) {
    r.note = "hypotheses not met: needs a strongly connected model with In = Out = {" +
             std::to_string(at) + "} and at least 2 compartments";
  } else if (m.leaks().empty()) {
    r.guarantee = Guarantee::Iff;
    r.theorem_tag = move_output ? "add-leaf-move-output" : "add-leaf-move-input";
    r.note = relabel_note(at, 1);
  } else if (m.leaks() == std::vector<int>{at}) {
    // Dropping the leak keeps identifiability here, and the leaf theorem
    // with one leak on the new model then applies.
    r.guarantee = Guarantee::PreservesIdentifiability;
    r.theorem_tag = "remove-leak then add-leaf-one-leak";
    r.note = relabel_note(at, 1);
  } else {
    r.note = "hypotheses not met: leak away from the input/output compartment";
  }
  return r;
}

}  // namespace

TransformResult add_leaf_edge(const Model& m, int at) {
  check_at(m, at);
  TransformResult r{with_leaf(m, at, m.inputs(), m.outputs()), Guarantee::None, "", ""};
  const bool ok = m.n() >= 2 && is_strongly_connected(m) && m.inputs().size() == 1 &&
                  m.outputs().size() == 1 && m.leaks().empty();
  if (ok) {
    r.guarantee = Guarantee::Both;
    r.theorem_tag = "add-leaf-edge";
    r.note = relabel_note(at, m.n());
  } else {
    r.note = "hypotheses not met: needs a strongly connected leakless model with one "
             "input, one output and at least 2 compartments";
  }
  return r;
}

TransformResult add_leaf_move_output(const Model& m, int at) {
  return leaf_move(m, at, true);
}

TransformResult add_leaf_move_input(const Model& m, int at) {
  return leaf_move(m, at, false);
}

TransformResult add_leak(const Model& m, int at) {
  check_at(m, at);
  if (m.is_leak(at)) {
    throw std::invalid_argument("compartment " + std::to_string(at) + " already leaks");
  }
  std::vector<int> leaks = m.leaks();
  leaks.push_back(at);
  TransformResult r{Model(m.n(), m.edges(), m.inputs(), m.outputs(), std::move(leaks)),
                    Guarantee::None, "", ""};
  if (is_strongly_connected(m) && !m.inputs().empty() && m.leaks().empty()) {
    r.guarantee = Guarantee::PreservesIdentifiability;
    r.theorem_tag = "add-leak";
  } else {
    r.note = "hypotheses not met: needs a strongly connected leakless model with an input";
  }
  return r;
}

TransformResult remove_leak(const Model& m, int at) {
  check_at(m, at);
  if (!m.is_leak(at)) {
    throw std::invalid_argument("compartment " + std::to_string(at) + " has no leak");
  }
  std::vector<int> leaks = m.leaks();
  std::erase(leaks, at);
  TransformResult r{Model(m.n(), m.edges(), m.inputs(), m.outputs(), std::move(leaks)),
                    Guarantee::None, "", ""};
  const std::vector<int> only{at};
  if (is_strongly_connected(m) && m.inputs() == only && m.outputs() == only &&
      m.leaks() == only) {
    r.guarantee = Guarantee::PreservesIdentifiability;
    r.theorem_tag = "remove-leak";
  } else {
    r.note = "hypotheses not met: needs In = Out = Leak = {" + std::to_string(at) + "}";
  }
  return r;
}

TransformResult apply_transform(const Model& m, const Transform& t) {
  switch (t.kind) {
    case TransformKind::AddLeafEdge: return add_leaf_edge(m, t.at);
    case TransformKind::AddLeafMoveOutput: return add_leaf_move_output(m, t.at);
    case TransformKind::AddLeafMoveInput: return add_leaf_move_input(m, t.at);
    case TransformKind::AddLeak: return add_leak(m, t.at);
    case TransformKind::RemoveLeak: return remove_leak(m, t.at);
  }
  throw std::invalid_argument("unknown transform kind");
}

RankRelationReport verify_rank_relation(const Model& m, TransformKind kind,
                                        const AnalysisOptions& opts) {
  if (kind != TransformKind::AddLeafMoveOutput && kind != TransformKind::AddLeafMoveInput) {
    throw std::invalid_argument("rank relation applies to move-output/move-input leaves");
  }
  const std::vector<int> one{1};
  if (!is_strongly_connected(m) || m.inputs() != one || m.outputs() != one ||
      !m.leaks().empty()) {
    throw std::invalid_argument(
        "rank relation needs a strongly connected leakless model with In = Out = {1}");
  }
  const bool move_output = kind == TransformKind::AddLeafMoveOutput;
  const Model after = move_output ? add_leaf_move_output(m, 1).model
                                  : add_leaf_move_input(m, 1).model;
  const int big = after.n();

  RankRelationReport report;
  report.rank_before = generic_rank(coefficient_map(m), opts.trials, opts.seed).rank;
  report.rank_after = generic_rank(coefficient_map(after), opts.trials, opts.seed).rank;
  report.rank_relation = report.rank_after == report.rank_before + 2;
  if (!report.rank_relation) report.failures.push_back("rank after != rank before + 2");

  // Before: c_0..c_{N-1} (c_{N-1} = 1) and d_0..d_{N-2} (d_{N-2} = 1).
  std::vector<Polynomial> c = lhs_coefficients(m);
  c.push_back(Polynomial::constant(1));
  const std::vector<Polynomial> d = rhs_coefficients(m, 1, 1).d;
  const std::vector<Polynomial> c_star = lhs_coefficients(after);
  const RhsCoefficients rhs_star =
      rhs_coefficients(after, after.outputs().front(), after.inputs().front());

  const Polynomial a_1n = Polynomial::variable(Param::edge(big, 1));
  const Polynomial a_n1 = Polynomial::variable(Param::edge(1, big));

  bool ok = c_star[0].is_zero();
  if (!ok) report.failures.push_back("c*_0 != 0");
  for (int i = 1; i < big; ++i) {
    const Polynomial expected = c[i - 1] + a_1n * c[i] + a_n1 * d[i - 1];
    if (c_star[i] != expected) {
      ok = false;
      report.failures.push_back("c*_" + std::to_string(i) + " relation");
    }
  }
  const Polynomial factor = Polynomial::constant((big - 1) % 2 == 0 ? 1 : -1) *
                            (move_output ? a_n1 : a_1n);
  for (int i = 0; i < big; ++i) {
    const Polynomial raw =
        rhs_star.sign > 0 ? rhs_star.d[i] : -rhs_star.d[i];
    const Polynomial expected = i + 1 < big ? factor * d[i] : Polynomial{};
    if (raw != expected) {
      ok = false;
      report.failures.push_back("d*_" + std::to_string(i) + " relation");
    }
  }
  report.coefficient_relations = ok;
  return report;
}

}  // namespace lincomp
