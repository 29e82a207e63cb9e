#include "lincomp/forestcalc.hpp"

#include <algorithm>
#include <stdexcept>

namespace lincomp {

namespace {

// Union-find with undo, so the depth-first walk can backtrack edge choices.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int size) : parent_(size), rank_(size, 0) {
    for (int v = 0; v < size; ++v) parent_[v] = v;
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // False if a and b are already connected (the edge would close a cycle).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    history_.push_back({b, rank_[a] == rank_[b]});
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  void undo() {
    const auto [child, bumped] = history_.back();
    history_.pop_back();
    const int root = parent_[child];
    if (bumped) --rank_[root];
    parent_[child] = child;
  }

 private:
  struct Step {
    int child;
    bool bumped;
  };
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<Step> history_;
};

// Visits every spanning incoming forest of `host`. Each node in turn picks
// no outgoing edge or exactly one; choices that close an undirected cycle
// are pruned immediately.
template <class Visit>
void walk_forests(const AuxGraph& host, Visit&& visit) {
  const int bound = host.id_bound();
  std::vector<std::vector<std::size_t>> out(bound);
  for (std::size_t k = 0; k < host.edges.size(); ++k) {
    out[host.edges[k].from].push_back(k);
  }
  RollbackUnionFind uf(bound);
  std::vector<std::size_t> chosen;
  std::vector<char> has_out(bound, 0);
  std::vector<int> sinks(bound, 0);

  auto check_sinks = [&]() {
    // Every component of an incoming forest has exactly one sink.
    for (int v : host.nodes) sinks[uf.find(v)] = 0;
    for (int v : host.nodes) {
      if (!has_out[v]) ++sinks[uf.find(v)];
    }
    for (int v : host.nodes) {
      if (sinks[uf.find(v)] != 1) {
        throw std::logic_error("forest component without a unique sink");
      }
    }
  };

  auto step = [&](auto&& self, std::size_t pos) -> void {
    if (pos == host.nodes.size()) {
      check_sinks();
      visit(chosen, uf);
      return;
    }
    const int v = host.nodes[pos];
    self(self, pos + 1);
    for (std::size_t k : out[v]) {
      if (!uf.unite(v, host.edges[k].to)) continue;
      chosen.push_back(k);
      has_out[v] = 1;
      self(self, pos + 1);
      has_out[v] = 0;
      chosen.pop_back();
      uf.undo();
    }
  };
  step(step, 0);
}

Monomial label_product(const AuxGraph& host, const std::vector<std::size_t>& edges) {
  std::vector<Monomial::Factor> factors;
  factors.reserve(edges.size());
  for (std::size_t k : edges) factors.emplace_back(host.edges[k].label, 1u);
  return Monomial::from_factors(std::move(factors));
}

void check_node(const Model& m, int i, const char* what) {
  if (i < 1 || i > m.n()) {
    throw std::invalid_argument(std::string(what) + " compartment " +
                                std::to_string(i) + " out of range");
  }
}

}  // namespace

std::vector<Forest> enumerate_forests(const AuxGraph& host, const ForestQuery& q) {
  std::vector<Forest> result;
  walk_forests(host, [&](const std::vector<std::size_t>& chosen,
                         const RollbackUnionFind& uf) {
    if (static_cast<int>(chosen.size()) != q.edge_count) return;
    if (q.same_component &&
        uf.find(q.same_component->first) != uf.find(q.same_component->second)) {
      return;
    }
    Forest f = chosen;
    std::sort(f.begin(), f.end());
    result.push_back(std::move(f));
  });
  return result;
}

std::vector<Polynomial> forest_sums(const AuxGraph& host,
                                    std::optional<std::pair<int, int>> same_component) {
  std::vector<Polynomial> sums(host.nodes.size());
  walk_forests(host, [&](const std::vector<std::size_t>& chosen,
                         const RollbackUnionFind& uf) {
    if (same_component &&
        uf.find(same_component->first) != uf.find(same_component->second)) {
      return;
    }
    sums[chosen.size()].add_term(label_product(host, chosen), 1);
  });
  return sums;
}

Polynomial productivity(const AuxGraph& host, const Forest& f) {
  return Polynomial::term(label_product(host, f), 1);
}

std::vector<Polynomial> lhs_coefficients(const Model& m) {
  const int n = m.n();
  // G~ has n + 1 nodes, so sums has entries for 0..n edges.
  const auto sums = forest_sums(leak_augmented(m));
  std::vector<Polynomial> c(n);
  for (int k = 0; k < n; ++k) c[k] = sums[n - k];
  return c;
}

RhsCoefficients rhs_coefficients(const Model& m, int out, int in) {
  check_node(m, out, "output");
  check_node(m, in, "input");
  const int n = m.n();
  const auto sums = forest_sums(strip_outgoing(m, out), std::make_pair(in, out));
  RhsCoefficients r;
  r.sign = (out + in) % 2 == 0 ? 1 : -1;
  r.d.resize(n);
  for (int k = 0; k < n; ++k) r.d[k] = sums[n - k - 1];
  return r;
}

std::vector<Polynomial> rhs_coefficients_multigraph(const Model& m, int i) {
  check_node(m, i, "compartment");
  if (m.inputs() != std::vector<int>{i} || m.outputs() != std::vector<int>{i}) {
    throw std::invalid_argument(
        "multigraph right-hand side needs In = Out = {" + std::to_string(i) + "}");
  }
  const int n = m.n();
  // G~_i has n nodes ({0..n} minus i): entries for 0..n-1 edges.
  const auto sums = forest_sums(flip_into_leak(m, i));
  std::vector<Polynomial> d(n > 0 ? n - 1 : 0);
  for (int k = 0; k + 1 < n; ++k) d[k] = sums[n - k - 1];
  return d;
}

IoEquation forest_io_equation(const Model& m, int out) {
  IoEquation eq;
  eq.out = out;
  eq.lhs = lhs_coefficients(m);
  eq.lhs.push_back(Polynomial::constant(1));
  for (int j : m.inputs()) eq.rhs[j] = rhs_coefficients(m, out, j);
  return eq;
}

NonconstantCounts nonconstant_counts(const Model& m) {
  if (m.inputs().size() != 1 || m.outputs().size() != 1) {
    throw std::invalid_argument("coefficient counts need one input and one output");
  }
  if (!is_strongly_connected(m)) {
    throw std::invalid_argument("coefficient counts need a strongly connected model");
  }
  const int n = m.n();
  const int in = m.inputs().front();
  const int out = m.outputs().front();
  NonconstantCounts counts;
  counts.lhs = m.leaks().empty() ? n - 1 : n;
  counts.rhs = in == out ? n - 1 : n - *distance(m, in, out);
  return counts;
}

}  // namespace lincomp
