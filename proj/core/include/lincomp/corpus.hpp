#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lincomp/model.hpp"

namespace lincomp {

/// Undirected edge list of a tree on 1..n.
using TreeEdges = std::vector<std::pair<int, int>>;

/// Every labeled tree on n vertices (n^(n-2) of them, via Pruefer
/// sequences); one empty tree for n = 1.
std::vector<TreeEdges> labeled_trees(int n);

/// Doubles every tree edge.
Model tree_model(int n, const TreeEdges& tree, std::vector<int> in,
                 std::vector<int> out, std::vector<int> leaks);

/// Path 1 - 2 - ... - n with edges in both directions.
Model catenary(int n, std::vector<int> in, std::vector<int> out, std::vector<int> leaks);

/// Star with center 1 and edges in both directions.
Model mammillary(int n, std::vector<int> in, std::vector<int> out,
                 std::vector<int> leaks);

/// Cycle 1 - 2 - ... - n - 1 with edges in both directions (n >= 3).
Model bidirectional_cycle(int n, std::vector<int> in, std::vector<int> out,
                          std::vector<int> leaks);

/// All subsets of {1..n} with at most max_size elements, by size then
/// lexicographically.
std::vector<std::vector<int>> small_subsets(int n, int max_size);

struct RandomModelOptions {
  int min_n = 1;
  int max_n = 5;
  double edge_probability = 0.45;
  double leak_probability = 0.3;
  /// Force In = Out = {1} and no leaks.
  bool in_equals_out_at_1_leakless = false;
};

/// A strongly connected model with one input and one output. Edges are
/// sampled independently until the digraph is strongly connected.
Model random_strongly_connected(std::mt19937_64& rng, const RandomModelOptions& opts);

struct NamedModel {
  std::string name;
  Model model;
  bool identifiable = false;  // verdict stated for this example
};

/// The worked examples: the complete 3-compartment model with a leak, the
/// counterexamples to the tree conditions on general graphs, the leaf-edge
/// examples (cycle and catenary), and bidirectional cycles with n = 3..6.
std::vector<NamedModel> reference_models();

}  // namespace lincomp
