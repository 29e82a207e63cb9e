#include "lincomp/audit.hpp"

#include <map>

#include <json.hpp>

#include "lincomp/corpus.hpp"
#include "lincomp/det_oracle.hpp"
#include "lincomp/forestcalc.hpp"
#include "lincomp/transforms.hpp"

namespace lincomp {

SweepSummary sweep_trees(int max_n, const AnalysisOptions& opts, int max_leaks) {
  SweepSummary s;
  s.max_n = max_n;
  AnalysisOptions rank_opts = opts;
  rank_opts.force_rank = true;
  for (int n = 1; n <= max_n; ++n) {
    const auto trees = labeled_trees(n);
    const auto leak_sets = small_subsets(n, max_leaks);
    std::size_t count = 0;
    for (const auto& tree : trees) {
      for (int in = 1; in <= n; ++in) {
        for (int out = 1; out <= n; ++out) {
          for (const auto& leaks : leak_sets) {
            const Model m = tree_model(n, tree, {in}, {out}, leaks);
            const bool by_theorem = classify_tree(m).identifiable();
            const bool by_rank = decide_identifiability(m, rank_opts).identifiable();
            ++count;
            if (by_rank) ++s.identifiable;
            if (by_theorem != by_rank) s.disagreements.push_back(serialize_model(m, -1));
          }
        }
      }
    }
    s.trees_per_n.push_back(trees.size());
    s.models_per_n.push_back(count);
    s.models += count;
  }
  return s;
}

std::string sweep_json(const SweepSummary& s, int indent) {
  nlohmann::ordered_json doc;
  doc["max_n"] = s.max_n;
  doc["trees_per_n"] = s.trees_per_n;
  doc["models_per_n"] = s.models_per_n;
  doc["models"] = s.models;
  doc["identifiable"] = s.identifiable;
  doc["disagreements"] = s.disagreements.size();
  auto bad = nlohmann::ordered_json::array();
  for (const auto& text : s.disagreements) bad.push_back(nlohmann::ordered_json::parse(text));
  doc["disagreement_models"] = std::move(bad);
  return doc.dump(indent);
}

namespace {

class CheckBook {
 public:
  void record(const std::string& name, bool ok, const Model& m) {
    auto [it, inserted] = index_.try_emplace(name, checks_.size());
    if (inserted) checks_.push_back({name, 0, 0});
    SelftestCheck& c = checks_[it->second];
    if (ok) {
      ++c.passed;
    } else {
      ++c.failed;
      failures_.push_back(name + ": " + serialize_model(m, -1));
    }
  }

  // Exceptions count as failures of the check that raised them.
  template <class F>
  void run(const std::string& name, const Model& m, F&& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      failures_.push_back(name + " threw " + e.what());
      ok = false;
      auto [it, inserted] = index_.try_emplace(name, checks_.size());
      if (inserted) checks_.push_back({name, 0, 0});
      ++checks_[it->second].failed;
      return;
    }
    record(name, ok, m);
  }

  std::vector<SelftestCheck> checks_;
  std::vector<std::string> failures_;

 private:
  std::map<std::string, std::size_t> index_;
};

int nonconstant(const std::vector<Polynomial>& polys) {
  int count = 0;
  for (const auto& p : polys) {
    if (!p.is_constant()) ++count;
  }
  return count;
}

void check_random_model(CheckBook& book, const Model& m, const AnalysisOptions& opts) {
  const int n = m.n();
  const int in = m.inputs().front();
  const int out = m.outputs().front();

  book.run("forest_equals_determinant", m, [&] {
    return forest_io_equation(m, out) == io_equation(m, out);
  });

  book.run("coefficient_counts", m, [&] {
    const NonconstantCounts expected = nonconstant_counts(m);
    return nonconstant(lhs_coefficients(m)) == expected.lhs &&
           nonconstant(rhs_coefficients(m, out, in).d) == expected.rhs;
  });

  book.run("constant_coefficients", m, [&] {
    const auto c = lhs_coefficients(m);
    const auto d = rhs_coefficients(m, out, in).d;
    bool ok = !m.leaks().empty() || c[0].is_zero();
    if (in == out) {
      ok = ok && d[n - 1] == Polynomial::constant(1);
    } else {
      const int dist = *distance(m, in, out);
      for (int k = n - dist; k < n; ++k) ok = ok && d[k].is_zero();
    }
    return ok;
  });

  book.run("determinant_identities", m, [&] {
    return check_minor_identities(m).all_hold();
  });

  if (in == out) {
    book.run("multigraph_rhs", m, [&] {
      const auto d = rhs_coefficients(m, out, in).d;
      const auto multi = rhs_coefficients_multigraph(m, in);
      return std::equal(multi.begin(), multi.end(), d.begin());
    });
  }

  AnalysisOptions rank_opts = opts;
  rank_opts.force_rank = true;
  const Verdict by_rank = decide_identifiability(m, rank_opts);
  if (count_criterion(m)) {
    book.record("count_criterion_sound", !by_rank.identifiable(), m);
  }
  if (isc_sufficiency(m)) {
    book.record("isc_sound", by_rank.identifiable(), m);
  }
  const std::size_t touched = in == out ? 1 : 2;
  if (m.leaks().size() > touched) {
    book.record("excess_leaks_unidentifiable", !by_rank.identifiable(), m);
  }
}

}  // namespace

SelftestSummary selftest(std::uint64_t seed, int trials, int random_models) {
  SelftestSummary s;
  s.seed = seed;
  s.trials = trials;
  s.random_models = random_models;
  AnalysisOptions opts;
  opts.trials = trials;
  opts.seed = seed;

  CheckBook book;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_models; ++k) {
    const Model m = random_strongly_connected(rng, RandomModelOptions{});
    check_random_model(book, m, opts);
  }

  RandomModelOptions leaf_opts;
  leaf_opts.min_n = 2;
  leaf_opts.max_n = 4;
  leaf_opts.in_equals_out_at_1_leakless = true;
  for (int k = 0; k < (random_models + 3) / 4; ++k) {
    const Model m = random_strongly_connected(rng, leaf_opts);
    for (auto kind : {TransformKind::AddLeafMoveOutput, TransformKind::AddLeafMoveInput}) {
      book.run("leaf_rank_relation", m,
               [&] { return verify_rank_relation(m, kind, opts).ok(); });
    }
  }

  for (const auto& ref : reference_models()) {
    const Model& m = ref.model;
    check_random_model(book, m, opts);
    book.run("reference_verdict", m, [&] {
      return decide_identifiability(m, opts).identifiable() == ref.identifiable;
    });
  }

  s.checks = std::move(book.checks_);
  s.failures = std::move(book.failures_);
  return s;
}

std::string selftest_json(const SelftestSummary& s, int indent) {
  nlohmann::ordered_json doc;
  doc["seed"] = s.seed;
  doc["trials"] = s.trials;
  doc["random_models"] = s.random_models;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : s.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["failed"] = c.failed;
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  doc["failures"] = s.failures;
  doc["ok"] = s.ok();
  return doc.dump(indent);
}

}  // namespace lincomp
