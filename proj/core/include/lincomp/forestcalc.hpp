#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lincomp/auxgraphs.hpp"
#include "lincomp/io_equation.hpp"
#include "lincomp/model.hpp"
#include "lincomp/polynomial.hpp"

namespace lincomp {

/// A spanning incoming forest, given as ascending indices into the host's
/// edge list (so parallel edges are told apart).
using Forest = std::vector<std::size_t>;

struct ForestQuery {
  int edge_count = 0;
  /// Restricts to F_j^{k,l}: some component contains both k and l.
  std::optional<std::pair<int, int>> same_component;
};

/// All spanning incoming forests of `host` matching `q`, in a deterministic
/// order (lexicographic on edge choices, node by node).
std::vector<Forest> enumerate_forests(const AuxGraph& host, const ForestQuery& q);

/// Sums of productivities grouped by edge count: entry j is the sum over
/// F_j(host) (or F_j^{k,l}(host)). One enumeration pass covers every j; the
/// result has host.nodes.size() entries (a forest has fewer edges than nodes).
std::vector<Polynomial> forest_sums(
    const AuxGraph& host,
    std::optional<std::pair<int, int>> same_component = std::nullopt);

/// Product of the edge labels; 1 for the empty forest.
Polynomial productivity(const AuxGraph& host, const Forest& f);

/// c_0..c_{n-1} with c_k = sum over F_{n-k}(G~); c_n = 1 is implied.
std::vector<Polynomial> lhs_coefficients(const Model& m);

/// d_0..d_{n-1} with d_k = sum over F^{in,out}_{n-k-1}(G~*_out), plus the
/// sign (-1)^{out+in}. No membership check on `out`/`in` beyond range.
RhsCoefficients rhs_coefficients(const Model& m, int out, int in);

/// d_0..d_{n-2} with d_k = sum over F_{n-k-1}(G~_i). Requires In = Out = {i};
/// throws std::invalid_argument otherwise. Empty when n = 1.
std::vector<Polynomial> rhs_coefficients_multigraph(const Model& m, int i);

/// The whole equation for one output, via forests (c_n = 1 appended).
IoEquation forest_io_equation(const Model& m, int out);

struct NonconstantCounts {
  int lhs = 0;
  int rhs = 0;

  bool operator==(const NonconstantCounts&) const = default;
};

/// Closed-form count of non-constant coefficients: lhs = n if Leak is
/// nonempty else n - 1; rhs = n - 1 if In = Out else n - dist(in, out).
/// Requires a strongly connected model with one input and one output;
/// throws std::invalid_argument otherwise.
NonconstantCounts nonconstant_counts(const Model& m);

}  // namespace lincomp
