#pragma once

#include <optional>
#include <vector>

#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/node_set.hpp"

namespace faithgraph {

/// Nodes b for which some walk from `from` to b is connecting given `given`.
/// Members of `from` are included trivially (length-zero walks).
///
/// Breadth-first search over states (node, mark of the edge that opened the
/// current section, whether the current section has met `given`). There are
/// at most 4|V| states, so the search is exact even though walks may revisit
/// nodes and edges.
NodeSet connected_given(const MixedGraph& g, NodeSet from, NodeSet given);

/// A ⊥ B | C: no walk between A and B is connecting given C. A and B must be
/// non-empty and the three sets pairwise disjoint; otherwise InputError
/// naming a shared node.
bool separates(const MixedGraph& g, NodeSet a, NodeSet b, NodeSet c);

struct Walk {
  std::vector<int> nodes;  // size edges.size() + 1
  std::vector<int> edges;  // indices into MixedGraph::edges()
};

/// Checks incidence: every edge joins its flanking nodes.
bool is_well_formed(const MixedGraph& g, const Walk& walk);

/// Applies the section definitions directly to an explicit walk: every
/// collider section meets `given`, every non-collider section avoids it.
bool is_connecting_walk(const MixedGraph& g, const Walk& walk, NodeSet given);

/// Brute-force oracle: enumerates explicit walks of at most `max_len` edges
/// from A, shortest first, and returns the first one that ends in B and is
/// connecting given C by the section definitions. A prefix is dropped once a
/// finished section breaks the definition, or when an earlier prefix ended
/// at the same node with an identical open section. With max_len = 4|V| it
/// decides separation exactly.
std::optional<Walk> connecting_walk_oracle(const MixedGraph& g, NodeSet a, NodeSet b,
                                           NodeSet c, int max_len);

}  // namespace faithgraph
