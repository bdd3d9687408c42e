#include <gtest/gtest.h>

#include "faithgraph/axioms.hpp"
#include "faithgraph/faithfulness.hpp"
#include "faithgraph/preorder.hpp"
#include "faithgraph/separation.hpp"
#include "faithgraph/text_formats.hpp"
#include "support/generators.hpp"

using namespace faithgraph;
using faithgraph::testing::Rng;

namespace {

NodeSet s2(int a, int b) { return NodeSet::of(a).with(b); }

bool compositional_graphoid(const IndependenceModel& j) {
  return check_semi_graphoid(j).passed() && check_intersection(j).passed() && check_composition(j).passed();
}

bool stable_under(const IndependenceModel& j, const Preorder& p) {
  return check_ordered_upward_stability(j, p).passed() && check_ordered_downward_stability(j, p).passed();
}

MixedGraph random_maximal_ang(int n, Rng& rng, double density) {
  for (;;) {
    MixedGraph g = faithgraph::testing::random_ang(n, rng, density);
    if (classify(g).is_maximal == true) return g;
  }
}

// Adds one elementary statement between non-adjacent nodes, so the skeleton
// of the model is unchanged.
std::optional<IndependenceModel> add_statement_keeping_skeleton(const IndependenceModel& j, const MixedGraph& g,
                                                                 Rng& rng) {
  const int n = g.node_count();
  std::vector<std::tuple<int, int, NodeSet>> missing;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for_each_subset(g.labels().all().without(a).without(b), [&](NodeSet c) {
        if (!j.holds(a, b, c)) missing.emplace_back(a, b, c);
      });
    }
  }
  if (missing.empty()) return std::nullopt;
  const auto& [a, b, c] = missing[rng() % missing.size()];
  return faithgraph::testing::flipped(j, a, b, c);
}

}  // namespace

TEST(Invariants, GraphTextRoundTripOnMultigraphs) {
  Rng rng(101);
  GraphParseOptions loose;
  loose.chain_multi_edges_only = false;
  for (int t = 0; t < 100; ++t) {
    const MixedGraph g = faithgraph::testing::random_mixed_graph(5, rng, 0.3);
    EXPECT_EQ(parse_graph(serialize_graph(g), "<graph>", loose), g);
  }
}

TEST(Invariants, MarkovImpliesSkeletonContainment) {
  Rng rng(102);
  for (int t = 0; t < 60; ++t) {
    const MixedGraph g = random_maximal_ang(5, rng, 0.5);
    IndependenceModel j = induced_model(g);
    // Supersets of J(G) stay Markov.
    for (int extra = 0; extra < 3; ++extra) {
      const int a = static_cast<int>(rng() % 5);
      const int b = (a + 1 + static_cast<int>(rng() % 4)) % 5;
      j.insert(NodeSet::of(a), NodeSet::of(b), {});
    }
    if (!is_markov(j, g)) continue;
    const MixedGraph sk = model_skeleton(j);
    for (const Edge& e : sk.edges()) EXPECT_TRUE(g.adjacent(e.from, e.to));
  }
}

TEST(Invariants, FaithfulImpliesMinimallyMarkov) {
  Rng rng(103);
  int faithful = 0;
  for (int t = 0; t < 80; ++t) {
    const MixedGraph g = faithgraph::testing::random_ang(4, rng, 0.5);
    const MixedGraph h = faithgraph::testing::random_ang(4, rng, 0.5);
    const IndependenceModel j = induced_model(g);
    if (is_faithful(j, h)) {
      ++faithful;
      EXPECT_TRUE(is_minimally_markov(j, h));
    }
  }
  EXPECT_GT(faithful, 0);
}

TEST(Invariants, StableCompatiblePreordersGiveMinimallyMarkovGraphs) {
  Rng rng(104);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    IndependenceModel j = induced_model(faithgraph::testing::random_ang(4, rng, 0.6));
    if (t % 3 == 2) {
      const int a = static_cast<int>(rng() % 4);
      j = faithgraph::testing::flipped(j, a, (a + 1) % 4, NodeSet{});
    }
    if (!compositional_graphoid(j)) continue;
    const MixedGraph sk = model_skeleton(j);
    for_each_compatible_preorder(j, [&](const Preorder& p) {
      if (!stable_under(j, p)) return;
      ++checked;
      const MixedGraph g = direct_skeleton(sk, p);
      EXPECT_TRUE(is_minimally_markov(j, g)) << serialize_model(j);
      if (is_maximal(g) && check_singleton_transitivity(j).passed()) {
        EXPECT_TRUE(is_faithful(j, g)) << serialize_model(j);
      }
    });
  }
  EXPECT_GT(checked, 20);
}

TEST(Invariants, NonMaximalDependenceGraphIsNotFaithful) {
  // The undirected 4-cycle a - c - b - d - a directed by classes {a,c} and
  // {b,d}: lines stay, the other two edges become arcs.
  const IndependenceModel j = induced_model(faithgraph::testing::graph_of(4, {"a -- c", "c -- b", "b -- d", "d -- a"}));
  const Preorder p = Preorder::from_classes(4, {s2(0, 2), s2(1, 3)}, {});
  ASSERT_TRUE(is_compatible(p, j));
  ASSERT_TRUE(compositional_graphoid(j));
  ASSERT_TRUE(check_singleton_transitivity(j).passed());
  ASSERT_TRUE(stable_under(j, p));
  const MixedGraph g = direct_skeleton(model_skeleton(j), p);
  EXPECT_EQ(g, faithgraph::testing::graph_of(4, {"a -- c", "a <-> d", "b <-> c", "b -- d"}));
  EXPECT_FALSE(is_maximal(g));
  EXPECT_TRUE(is_minimally_markov(j, g));
  EXPECT_FALSE(is_faithful(j, g));
  const FaithfulnessVerdict v = decide_graphical(j);
  ASSERT_TRUE(v.graphical());
  for (const Preorder& q : v.preorders) EXPECT_FALSE(q == p);
}

TEST(Invariants, FaithfulnessBiconditionalUnderMinimalMarkovness) {
  Rng rng(105);
  int faithful = 0, unfaithful = 0;
  for (int t = 0; t < 60; ++t) {
    const MixedGraph g = random_maximal_ang(4, rng, 0.5);
    const IndependenceModel base = induced_model(g);
    std::vector<IndependenceModel> candidates{base};
    if (auto more = add_statement_keeping_skeleton(base, g, rng)) candidates.push_back(*more);
    for (const IndependenceModel& j : candidates) {
      if (!is_minimally_markov(j, g)) continue;
      const bool rhs = check_singleton_transitivity(j).passed() && stable_under(j, minimal_preorder(g));
      const bool lhs = is_faithful(j, g);
      EXPECT_EQ(lhs, rhs) << serialize_graph(g) << serialize_model(j);
      (lhs ? faithful : unfaithful) += 1;
    }
  }
  EXPECT_GT(faithful, 10);
  EXPECT_GT(unfaithful, 10);
}

TEST(Invariants, WitnessesArePairwiseMarkovEquivalent) {
  Rng rng(106);
  for (int t = 0; t < 20; ++t) {
    const IndependenceModel j = induced_model(faithgraph::testing::random_ang(4, rng, 0.6));
    const FaithfulnessVerdict v = decide_graphical(j);
    ASSERT_TRUE(v.graphical());
    for (std::size_t a = 0; a < v.witnesses.size(); ++a) {
      EXPECT_TRUE(is_anterial(v.witnesses[a]));
      for (std::size_t b = a + 1; b < v.witnesses.size(); ++b) {
        EXPECT_TRUE(markov_equivalent(v.witnesses[a], v.witnesses[b]));
      }
    }
  }
}

TEST(Invariants, EquivalentMaximalGraphsShareSkeletons) {
  Rng rng(107);
  int pairs = 0;
  for (int t = 0; t < 300; ++t) {
    const MixedGraph g = random_maximal_ang(4, rng, 0.5);
    const MixedGraph h = random_maximal_ang(4, rng, 0.5);
    if (!markov_equivalent(g, h)) continue;
    ++pairs;
    EXPECT_EQ(skeleton(g), skeleton(h));
  }
  EXPECT_GT(pairs, 0);
}

TEST(Invariants, PerturbedModelsLoseTheOriginalClass) {
  Rng rng(108);
  for (int t = 0; t < 25; ++t) {
    const MixedGraph g = faithgraph::testing::random_ang(4, rng, 0.5);
    const IndependenceModel j = induced_model(g);
    const int a = static_cast<int>(rng() % 4);
    const int b = (a + 1 + static_cast<int>(rng() % 3)) % 4;
    NodeSet c;
    for (int v = 0; v < 4; ++v) {
      if (v != a && v != b && rng() % 2) c = c.with(v);
    }
    const IndependenceModel k = faithgraph::testing::flipped(j, a, b, c);
    const FaithfulnessVerdict v = decide_graphical(k);
    for (const MixedGraph& w : v.witnesses) EXPECT_FALSE(markov_equivalent(w, g));
    EXPECT_FALSE(is_faithful(k, g));
  }
}

TEST(Invariants, PairwiseAgreesWithGlobalOnCompositionalGraphoids) {
  Rng rng(109);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const MixedGraph g = random_maximal_ang(4, rng, 0.5);
    const MixedGraph h = faithgraph::testing::random_ang(4, rng, 0.5);
    const IndependenceModel j = induced_model(h);
    ASSERT_TRUE(compositional_graphoid(j));
    EXPECT_EQ(is_pairwise_markov(j, g), is_markov(j, g)) << serialize_graph(g) << serialize_graph(h);
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(Invariants, AlphaPreservesTheAxiomsOnDags) {
  Rng rng(110);
  for (int t = 0; t < 20; ++t) {
    const MixedGraph g = faithgraph::testing::random_dag(5, rng, 0.5);
    NodeSet m, c;
    for (int v = 0; v < 5; ++v) {
      const auto r = rng() % 3;
      if (r == 1) m = m.with(v);
      if (r == 2) c = c.with(v);
    }
    const IndependenceModel k = alpha(induced_model(g), m, c);
    EXPECT_TRUE(check_intersection(k).passed());
    EXPECT_TRUE(check_composition(k).passed());
    EXPECT_TRUE(check_singleton_transitivity(k).passed());
  }
}

TEST(Invariants, SeparationSymmetric) {
  Rng rng(111);
  for (int t = 0; t < 50; ++t) {
    const MixedGraph g = faithgraph::testing::random_mixed_graph(5, rng, 0.3);
    const NodeSet a = NodeSet::of(static_cast<int>(rng() % 5));
    const NodeSet b = NodeSet::of(static_cast<int>(rng() % 5)) - a;
    if (b.empty()) continue;
    NodeSet c;
    for (int v = 0; v < 5; ++v) {
      if (!a.contains(v) && !b.contains(v) && rng() % 2) c = c.with(v);
    }
    EXPECT_EQ(separates(g, a, b, c), separates(g, b, a, c));
  }
}
