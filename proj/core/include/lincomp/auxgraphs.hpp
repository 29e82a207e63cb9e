#pragma once

#include <string>
#include <vector>

#include "lincomp/model.hpp"
#include "lincomp/polynomial.hpp"

namespace lincomp {

struct AuxEdge {
  int from = 0;
  int to = 0;
  Param label;

  bool operator==(const AuxEdge&) const = default;
};

/// A labeled digraph on a subset of {0, 1, ..., n}. Edges are identified by
/// their index in `edges`, so parallel edges with different labels stay
/// distinct.
struct AuxGraph {
  std::vector<int> nodes;  // ascending
  std::vector<AuxEdge> edges;
  bool allows_multi_edges = false;

  bool has_node(int v) const;
  /// Largest node id + 1 (size for id-indexed tables).
  int id_bound() const { return nodes.empty() ? 0 : nodes.back() + 1; }
  /// Indices of edges leaving v, in edge order.
  std::vector<std::size_t> out_edges(int v) const;

  std::string to_dot(const std::string& name = "G") const;

  bool operator==(const AuxGraph&) const = default;
};

/// G~: G plus node 0 and an edge j -> 0 labeled a0j for every leak j.
AuxGraph leak_augmented(const Model& m);

/// G~*_i: G~ without any edge leaving i (leak edge included).
AuxGraph strip_outgoing(const Model& m, int i);
AuxGraph strip_outgoing(const AuxGraph& g, int i);

/// G~_i: from G~*_i, every edge j -> i becomes j -> 0 (same label), then
/// node i is deleted. May contain parallel edges into 0.
AuxGraph flip_into_leak(const Model& m, int i);

/// Square matrix of Polynomials indexed 1..n.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  Polynomial& at(int row, int col) { return entries_[index(row, col)]; }
  const Polynomial& at(int row, int col) const { return entries_[index(row, col)]; }

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t index(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_) {
      throw std::out_of_range("SymMatrix index out of range");
    }
    return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
  }

  int n_;
  std::vector<Polynomial> entries_;
};

/// A: A_ij = a_ij for an edge j -> i, A_ii = -a0i[i leaks] - sum over
/// edges i -> k of a_ki, zero elsewhere.
SymMatrix compartmental_matrix(const Model& m);

/// A*_i: A with column i replaced by zeros.
SymMatrix star_matrix(const Model& m, int i);

}  // namespace lincomp
