#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "faithgraph/axioms.hpp"
#include "faithgraph/independence_model.hpp"
#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/preorder.hpp"

namespace faithgraph {

/// sk(J): a line between i and j unless <i,j|C> holds for some C.
MixedGraph model_skeleton(const IndependenceModel& j, const Limits& limits = {});

/// C(i,j) = ant(i) ∪ ant(j) \ {i,j}. Throws InputError if i and j are
/// adjacent.
NodeSet pairwise_conditioning_set(const MixedGraph& g, int i, int j);

/// The graph is matched to the model by label; the node sets must agree.
bool is_pairwise_markov(const IndependenceModel& j, const MixedGraph& g, const Limits& limits = {});
/// J(G) ⊆ J.
bool is_markov(const IndependenceModel& j, const MixedGraph& g, const Limits& limits = {});
/// Markov and sk(G) = sk(J).
bool is_minimally_markov(const IndependenceModel& j, const MixedGraph& g, const Limits& limits = {});
/// J = J(G).
bool is_faithful(const IndependenceModel& j, const MixedGraph& g, const Limits& limits = {});

struct FaithfulnessFailure {
  std::string property;
  std::optional<Violation> witness;
  /// Candidate preorders examined before giving up.
  std::uint64_t candidates_tested = 0;
};

struct FaithfulnessVerdict {
  /// Faithful graphs found, in enumeration order.
  std::vector<MixedGraph> witnesses;
  /// The preorder behind each witness.
  std::vector<Preorder> preorders;
  std::optional<FaithfulnessFailure> failure;

  bool graphical() const noexcept { return !witnesses.empty(); }
};

struct DecideOptions {
  Limits limits{};
  /// Worker threads for the directing search; 0 or 1 runs inline.
  unsigned workers = 1;
  /// Confirm every witness with is_faithful.
  bool verify = true;
};

/// Checks the compositional graphoid axioms and singleton-transitivity, then
/// searches the directings of sk(J) for compatible preorders under which
/// both ordered stabilities hold and whose directed skeleton is maximal.
/// The first failed condition is reported;
/// a failed search is reported as "ordered-stability".
FaithfulnessVerdict decide_graphical(const IndependenceModel& j, const DecideOptions& options = {});

enum class GraphClass { UG, BG, DAG, AnG };

std::string_view to_string(GraphClass c) noexcept;

/// Faithfulness to a graph of one class. UG and BG use the pairwise
/// constructions; DAG searches arrow-only directings; AnG is
/// decide_graphical.
FaithfulnessVerdict restricted_graphical(const IndependenceModel& j, GraphClass target,
                                         const DecideOptions& options = {});

/// Edge i -- j unless <i,j | V \ {i,j}> holds.
MixedGraph pairwise_undirected_graph(const IndependenceModel& j);
/// Arc i <-> j unless <i,j | ∅> holds.
MixedGraph pairwise_bidirected_graph(const IndependenceModel& j);

}  // namespace faithgraph
