#include "lincomp/corpus.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace lincomp {

namespace {

TreeEdges decode_pruefer(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n + 1, 1);
  for (int v : seq) ++degree[v];
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  TreeEdges edges;
  for (int v : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

std::vector<Edge> doubled(const TreeEdges& tree) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : tree) {
    edges.push_back({a, b});
    edges.push_back({b, a});
  }
  return edges;
}

}  // namespace

std::vector<TreeEdges> labeled_trees(int n) {
  if (n < 1) throw std::invalid_argument("trees need at least one vertex");
  if (n == 1) return {TreeEdges{}};
  std::vector<TreeEdges> out;
  std::vector<int> seq(n - 2, 1);
  while (true) {
    out.push_back(decode_pruefer(n, seq));
    int k = n - 3;
    while (k >= 0 && seq[k] == n) seq[k--] = 1;
    if (k < 0) break;
    ++seq[k];
  }
  return out;
}

Model tree_model(int n, const TreeEdges& tree, std::vector<int> in,
                 std::vector<int> out, std::vector<int> leaks) {
  return Model(n, doubled(tree), std::move(in), std::move(out), std::move(leaks));
}

Model catenary(int n, std::vector<int> in, std::vector<int> out, std::vector<int> leaks) {
  TreeEdges path;
  for (int v = 1; v < n; ++v) path.emplace_back(v, v + 1);
  return tree_model(n, path, std::move(in), std::move(out), std::move(leaks));
}

Model mammillary(int n, std::vector<int> in, std::vector<int> out,
                 std::vector<int> leaks) {
  TreeEdges star;
  for (int v = 2; v <= n; ++v) star.emplace_back(1, v);
  return tree_model(n, star, std::move(in), std::move(out), std::move(leaks));
}

Model bidirectional_cycle(int n, std::vector<int> in, std::vector<int> out,
                          std::vector<int> leaks) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 compartments");
  TreeEdges ring;
  for (int v = 1; v < n; ++v) ring.emplace_back(v, v + 1);
  ring.emplace_back(1, n);
  return Model(n, doubled(ring), std::move(in), std::move(out), std::move(leaks));
}

std::vector<std::vector<int>> small_subsets(int n, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> pick = [&](int next, int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= n; ++v) {
      current.push_back(v);
      pick(v + 1, remaining - 1);
      current.pop_back();
    }
  };
  for (int size = 0; size <= max_size && size <= n; ++size) pick(1, size);
  return out;
}

Model random_strongly_connected(std::mt19937_64& rng, const RandomModelOptions& opts) {
  std::uniform_int_distribution<int> size(opts.min_n, opts.max_n);
  std::bernoulli_distribution edge(opts.edge_probability);
  std::bernoulli_distribution leak(opts.leak_probability);
  const int n = size(rng);
  std::uniform_int_distribution<int> node(1, n);
  while (true) {
    std::vector<Edge> edges;
    for (int from = 1; from <= n; ++from) {
      for (int to = 1; to <= n; ++to) {
        if (from != to && edge(rng)) edges.push_back({from, to});
      }
    }
    std::vector<int> leaks;
    std::vector<int> in{1};
    std::vector<int> out{1};
    if (!opts.in_equals_out_at_1_leakless) {
      for (int v = 1; v <= n; ++v) {
        if (leak(rng)) leaks.push_back(v);
      }
      in = {node(rng)};
      out = {node(rng)};
    }
    Model m(n, std::move(edges), std::move(in), std::move(out), std::move(leaks));
    if (is_strongly_connected(m)) return m;
  }
}

std::vector<NamedModel> reference_models() {
  std::vector<NamedModel> out;
  out.push_back({"figure1",
                 Model(3, {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}, {1}, {1}, {2}),
                 false});
  out.push_back({"uniden-dist-0-leak-0",
                 Model(3, {{1, 2}, {3, 1}, {2, 3}, {3, 2}}, {1}, {1}, {}), false});
  out.push_back({"iden-dist-2", Model(3, {{1, 2}, {2, 3}, {3, 1}}, {1}, {3}, {}), true});
  out.push_back({"iden-leak-2", Model(3, {{1, 2}, {2, 3}, {3, 1}}, {1}, {2}, {1, 2}), true});

  const std::vector<Edge> cycle_graph{{2, 1}, {1, 2}, {2, 3}, {3, 1}};
  std::vector<Edge> cycle_leafed = cycle_graph;
  cycle_leafed.push_back({1, 4});
  cycle_leafed.push_back({4, 1});
  out.push_back({"fig3-M", Model(3, cycle_graph, {1}, {1}, {}), true});
  out.push_back({"fig3-M-prime", Model(4, cycle_leafed, {1}, {4}, {}), true});
  out.push_back({"fig3-M-double-prime", Model(4, cycle_leafed, {1}, {1}, {}), true});

  out.push_back({"fig4-M", catenary(3, {1}, {1}, {1}), true});
  out.push_back({"fig4-M-prime",
                 tree_model(4, {{1, 2}, {2, 3}, {1, 4}}, {4}, {1}, {1}), true});

  for (int n = 3; n <= 6; ++n) {
    out.push_back({"bicycle" + std::to_string(n), bidirectional_cycle(n, {1}, {1}, {}),
                   false});
  }
  return out;
}

}  // namespace lincomp
