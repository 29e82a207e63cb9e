#pragma once

#include <string>
#include <vector>

#include "lincomp/ident_engine.hpp"
#include "lincomp/model.hpp"

namespace lincomp {

enum class TransformKind { AddLeafEdge, AddLeafMoveOutput, AddLeafMoveInput, AddLeak, RemoveLeak };

struct Transform {
  TransformKind kind = TransformKind::AddLeafEdge;
  int at = 1;
};

/// "add-leaf", "add-leaf-move-output", "add-leaf-move-input", "add-leak",
/// "remove-leak"; parse_transform_kind throws std::invalid_argument.
std::string to_string(TransformKind k);
TransformKind parse_transform_kind(const std::string& name);

enum class Guarantee { None, PreservesIdentifiability, PreservesExpectedDimension, Both, Iff };

std::string to_string(Guarantee g);  // "none", "preserves_identifiability", ...

struct TransformResult {
  Model model;
  Guarantee guarantee = Guarantee::None;
  std::string theorem_tag;  // empty when no guarantee
  /// Hypotheses that failed, or how compartment labels map onto the
  /// theorem's statement.
  std::string note;
};

/// New compartment n+1 joined to `at` by edges in both directions; inputs,
/// outputs and leaks unchanged. Guarantee Both (expected dimension and
/// identifiability carry over) when the model is strongly connected with one
/// input, one output, no leaks and at least 2 compartments.
TransformResult add_leaf_edge(const Model& m, int at);

/// Leaf at `at`, then the output (resp. input) moves to the new compartment.
/// Guarantee Iff when the model is strongly connected, In = Out = {at},
/// Leak is empty and it has at least 2 compartments. When instead the only
/// leak sits at `at` (In = Out = Leak = {at}), the leak is kept and the
/// guarantee is PreservesIdentifiability.
TransformResult add_leaf_move_output(const Model& m, int at = 1);
TransformResult add_leaf_move_input(const Model& m, int at = 1);

/// Guarantee PreservesIdentifiability when the model is strongly connected,
/// has an input and no leaks. Throws std::invalid_argument if `at` already
/// leaks.
TransformResult add_leak(const Model& m, int at);

/// Guarantee PreservesIdentifiability when In = Out = Leak = {at} and the
/// model is strongly connected. Throws std::invalid_argument if `at` has no
/// leak.
TransformResult remove_leak(const Model& m, int at);

/// Dispatches on t.kind. Throws ModelError for an out-of-range `at`.
TransformResult apply_transform(const Model& m, const Transform& t);

struct RankRelationReport {
  std::size_t rank_before = 0;
  std::size_t rank_after = 0;
  bool rank_relation = false;          // rank_after == rank_before + 2
  bool coefficient_relations = false;  // c*, d* identities, exact
  std::vector<std::string> failures;

  bool ok() const { return rank_relation && coefficient_relations; }
};

/// For a strongly connected leakless model with In = Out = {1} and a
/// move-output or move-input leaf transform at 1: compares generic ranks
/// before and after, and checks symbolically
///   c*_0 = 0,  c*_i = c_{i-1} + a_{1N} c_i + a_{N1} d_{i-1},
///   raw d*_i = (-1)^{N-1} a_{N1} d_i (output moved) or
///              (-1)^{N-1} a_{1N} d_i (input moved),
/// where N is the new compartment. Throws std::invalid_argument when the
/// hypotheses fail.
RankRelationReport verify_rank_relation(const Model& m, TransformKind kind,
                                        const AnalysisOptions& opts = {});

}  // namespace lincomp
