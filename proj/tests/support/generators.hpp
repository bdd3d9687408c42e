#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "faithgraph/independence_model.hpp"
#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/preorder.hpp"

namespace faithgraph::testing {

using Rng = std::mt19937_64;

/// a, b, c, ... (then n0, n1, ... past 26).
NodeLabels letters(int n);

/// Graph over letters(n) from "a -> b" style edge strings.
MixedGraph graph_of(int n, const std::vector<std::string>& edges);

/// Uniform random preorder: random classes, then a random order on them.
Preorder random_preorder(int n, Rng& rng);

/// Random skeleton (each pair with probability `density`) directed by a
/// random preorder, hence anterial.
MixedGraph random_ang(int n, Rng& rng, double density = 0.5);
MixedGraph random_dag(int n, Rng& rng, double density = 0.5);
MixedGraph random_connected_ug(int n, Rng& rng, double extra_density = 0.3);
/// Any mixed graph: each pair gets each of line, both arrows and arc with
/// probability `density`, so parallel edges and cycles occur.
MixedGraph random_mixed_graph(int n, Rng& rng, double density = 0.3);

/// Every graph with at most one of {none, line, ->, <-, <->} per pair,
/// in base-5 counting order over the pairs (a,b), (a,c), ..., (b,c), ...
void for_each_simple_graph(int n, const std::function<void(const MixedGraph&)>& fn);
/// Every graph with any subset of {line, ->, <-, <->} per pair.
void for_each_multigraph(int n, const std::function<void(const MixedGraph&)>& fn);
/// The anterial members of for_each_simple_graph; anterial graphs never
/// carry parallel edges.
void for_each_anterial_graph(int n, const std::function<void(const MixedGraph&)>& fn);

/// Closure of `seed` under symmetry, decomposition, weak union and
/// contraction, by fixpoint iteration over all instantiations.
IndependenceModel semi_graphoid_closure(const IndependenceModel& seed);

/// Random model over letters(n): each non-trivial statement independently
/// with probability `density`, symmetrized.
IndependenceModel random_model(int n, Rng& rng, double density);

/// Flips <i,j|C> (and its mirror) for the given elementary statement.
IndependenceModel flipped(const IndependenceModel& j, int i, int k, NodeSet c);

}  // namespace faithgraph::testing
