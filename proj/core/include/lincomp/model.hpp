#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincomp {

/// Raised for any structurally invalid model. `path()` names the offending
/// JSON field (e.g. "edges[2].from") or is empty for whole-model errors.
class ModelError : public std::runtime_error {
 public:
  ModelError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A flow-rate indeterminate. Edge j -> i is a_{ij} (row = i, col = j);
/// a leak at j is a_{0j} (row = 0, col = j).
///
/// The total order compares (row, col), i.e. the order of the printed names
/// a01 < a02 < a12 < a13 < a21 < ..., so leak parameters sort before edge
/// parameters. Monomials and canonical text use this order.
struct Param {
  int row = 0;
  int col = 0;

  static constexpr Param edge(int from, int to) { return Param{to, from}; }
  static constexpr Param leak(int at) { return Param{0, at}; }

  constexpr bool is_leak() const { return row == 0; }

  /// "a21", "a02"; indices of 10 or more are separated: "a10_2".
  std::string name() const;

  auto operator<=>(const Param&) const = default;
};

struct Edge {
  int from = 0;
  int to = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Linear compartmental model (G, In, Out, Leak) on compartments 1..n.
/// Compartment 0 is reserved for the leak node of auxiliary graphs.
class Model {
 public:
  /// Validates and canonicalizes (sorts) its arguments. Throws ModelError on
  /// self-edges, duplicate edges, out-of-range ids, duplicate set members or
  /// an empty output set.
  Model(int n, std::vector<Edge> edges, std::vector<int> inputs,
        std::vector<int> outputs, std::vector<int> leaks);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<int>& outputs() const { return outputs_; }
  const std::vector<int>& leaks() const { return leaks_; }

  bool has_edge(int from, int to) const;
  bool is_input(int i) const;
  bool is_output(int i) const;
  bool is_leak(int i) const;

  /// Number of parameters |E_G| + |Leak|.
  std::size_t param_count() const { return edges_.size() + leaks_.size(); }

  /// out-neighbours / in-neighbours of compartment i, ascending.
  std::vector<int> successors(int i) const;
  std::vector<int> predecessors(int i) const;

  bool operator==(const Model&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
  std::vector<int> leaks_;
};

/// Parameters of a model in Jacobian column order: edge parameters sorted by
/// (to, from), then leak parameters sorted by compartment.
using ParamVector = std::vector<Param>;

ParamVector param_vector(const Model& m);

/// Reads the canonical model JSON:
///   {"compartments": n, "edges": [{"from": j, "to": i}, ...],
///    "in": [...], "out": [...], "leak": [...]}
/// Edge {"from": j, "to": i} carries parameter a_{ij}. Unknown keys are
/// rejected.
Model parse_model(const std::string& text);

/// Inverse of parse_model, with sorted arrays and a fixed key order.
std::string serialize_model(const Model& m, int indent = 2);

bool is_strongly_connected(const Model& m);

/// Length of a shortest directed path a -> b; nullopt when b is unreachable.
std::optional<int> distance(const Model& m, int a, int b);

/// Searches for an ordering root = v1, v2, ..., vn whose every prefix induces
/// a strongly connected subgraph. Returns the witness ordering, or nullopt.
/// Exponential in the worst case; intended for n <= ~16.
std::optional<std::vector<int>> inductively_strongly_connected_order(
    const Model& m, int root);

inline bool is_inductively_strongly_connected(const Model& m, int root) {
  return inductively_strongly_connected_order(m, root).has_value();
}

/// True iff G is obtained from an undirected tree on all n compartments by
/// doubling every edge. The single-compartment graph counts as a tree.
bool is_bidirectional_tree(const Model& m);

}  // namespace lincomp
