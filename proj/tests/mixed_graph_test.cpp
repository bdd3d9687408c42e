#include <gtest/gtest.h>

#include <functional>

#include "faithgraph/errors.hpp"
#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/separation.hpp"
#include "support/generators.hpp"

using namespace faithgraph;
using faithgraph::testing::graph_of;

namespace {

NodeSet s(std::initializer_list<int> members) {
  NodeSet out;
  for (int v : members) out = out.with(v);
  return out;
}

// Walk-based oracle: i is anterior to j when some walk from i to j uses only
// lines and arrows pointing towards j. Simple paths suffice for reachability.
NodeSet anterior_oracle(const MixedGraph& g, int j, bool lines_allowed) {
  NodeSet found;
  std::function<void(int, NodeSet)> walk = [&](int v, NodeSet visited) {
    for (const Edge& e : g.edges()) {
      if (!e.touches(v)) continue;
      const int w = e.other(v);
      if (visited.contains(w)) continue;
      // Walking backwards from j: an arrow must point at v.
      const bool ok = (e.kind == EdgeKind::line && lines_allowed) || (e.kind == EdgeKind::arrow && e.to == v);
      if (!ok) continue;
      found = found.with(w);
      walk(w, visited.with(w));
    }
  };
  walk(j, NodeSet::of(j));
  return found.without(j);
}

}  // namespace

TEST(MixedGraph, RejectsLoopsAndUnknownLabels) {
  MixedGraph g(faithgraph::testing::letters(2));
  EXPECT_THROW(g.add_edge(0, 0, EdgeKind::line), InputError);
  EXPECT_THROW(g.add_edge("a", "z", EdgeKind::line), InputError);
}

TEST(MixedGraph, ParallelEdgesAreKept) {
  const MixedGraph g = graph_of(2, {"a -- b", "a <-> b", "a -- b"});
  EXPECT_EQ(g.edges().size(), 3u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(classify(g).is_simple);
}

TEST(MixedGraph, EqualityIgnoresEdgeOrderAndSymmetricEndpointOrder) {
  const MixedGraph a = graph_of(3, {"a -- b", "b <-> c", "a -> c"});
  const MixedGraph b = graph_of(3, {"c <-> b", "a -> c", "b -- a"});
  const MixedGraph c = graph_of(3, {"c <-> b", "c -> a", "b -- a"});
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
}

TEST(Anteriors, ArrowThenLine) {
  const MixedGraph g = graph_of(3, {"a -> b", "b -- c"});
  EXPECT_EQ(anteriors(g, "c"), NodeSet::of(0) | NodeSet::of(1));
  EXPECT_EQ(anteriors(g, "c"), anterior_oracle(g, 2, true));
  EXPECT_EQ(ancestors(g, "c"), NodeSet{});
  EXPECT_EQ(ancestors(g, "b"), NodeSet::of(0));
}

TEST(Anteriors, EdgelessAndArcOnly) {
  EXPECT_TRUE(anteriors(graph_of(3, {}), "b").empty());
  EXPECT_TRUE(anteriors(graph_of(2, {"a <-> b"}), "b").empty());
}

TEST(Anteriors, NodeIsNotItsOwnAnterior) {
  const MixedGraph g = graph_of(2, {"a -- b"});
  EXPECT_EQ(anteriors(g, "a"), NodeSet::of(1));
}

TEST(Anteriors, UnknownLabelIsNamed) {
  const MixedGraph g = graph_of(2, {});
  try {
    anteriors(g, "zz");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(Anteriors, AgreesWithWalkOracleOnRandomGraphs) {
  faithgraph::testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MixedGraph g = faithgraph::testing::random_mixed_graph(6, rng, 0.2);
    for (int j = 0; j < 6; ++j) {
      EXPECT_EQ(anteriors(g, j), anterior_oracle(g, j, true));
      EXPECT_EQ(ancestors(g, j), anterior_oracle(g, j, false));
    }
  }
}

TEST(Anteriors, RelationIsTransitive) {
  faithgraph::testing::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const MixedGraph g = faithgraph::testing::random_mixed_graph(6, rng, 0.15);
    const auto ant = all_anteriors(g);
    for (int k = 0; k < 6; ++k) {
      for (int j : ant[static_cast<std::size_t>(k)]) {
        for (int i : ant[static_cast<std::size_t>(j)]) {
          if (i != k) {
            EXPECT_TRUE(ant[static_cast<std::size_t>(k)].contains(i));
          }
        }
      }
    }
  }
}

TEST(Classify, DirectedCycleIsNotChainMixed) {
  const auto r = classify(graph_of(3, {"a -> b", "b -> c", "c -> a"}));
  EXPECT_FALSE(r.is_CMG);
  EXPECT_FALSE(r.is_AnG);
  EXPECT_FALSE(r.is_maximal.has_value());
}

TEST(Classify, SemiDirectedCycleThroughLine) {
  EXPECT_FALSE(classify(graph_of(3, {"a -> b", "b -- c", "c -- a"})).is_CMG);
}

TEST(Classify, DagIsAnterial) {
  const auto r = classify(graph_of(4, {"a -> b", "a -> c", "b -> d", "c -> d"}));
  EXPECT_TRUE(r.is_DAG);
  EXPECT_TRUE(r.is_AnG);
  EXPECT_TRUE(r.is_CMG);
  EXPECT_TRUE(r.is_AG);
  EXPECT_TRUE(r.is_UCG);
  EXPECT_TRUE(r.is_BCG);
}

TEST(Classify, LinePlusArcIsChainMixedButNotAnterial) {
  const auto r = classify(graph_of(2, {"a -- b", "a <-> b"}));
  EXPECT_TRUE(r.is_CMG);
  EXPECT_FALSE(r.is_AnG);
  EXPECT_FALSE(r.is_simple);
}

TEST(Classify, UndirectedAndBidirected) {
  const auto ug = classify(graph_of(3, {"a -- b", "b -- c"}));
  EXPECT_TRUE(ug.is_UG);
  EXPECT_FALSE(ug.is_BG);
  EXPECT_TRUE(ug.is_UCG);
  EXPECT_TRUE(ug.is_regression_graph);
  const auto bg = classify(graph_of(3, {"a <-> b", "b <-> c"}));
  EXPECT_TRUE(bg.is_BG);
  EXPECT_TRUE(bg.is_BCG);
  EXPECT_FALSE(bg.is_UCG);
}

TEST(Classify, ChainGraphKinds) {
  // An arrow into a line component: LWF chain graph, not a regression graph.
  const auto lwf = classify(graph_of(3, {"a -> b", "b -- c"}));
  EXPECT_TRUE(lwf.is_UCG);
  EXPECT_FALSE(lwf.is_regression_graph);
  EXPECT_FALSE(lwf.is_AG);
  // Arrow into an arc component: regression graph.
  const auto reg2 = classify(graph_of(4, {"a -- d", "a -> b", "b <-> c"}));
  EXPECT_TRUE(reg2.is_regression_graph);
  EXPECT_TRUE(reg2.is_AG);
  // An arrow inside a line component is not a chain graph.
  const auto mixed = classify(graph_of(3, {"a -- b", "b -- c", "a -> c"}));
  EXPECT_FALSE(mixed.is_UCG);
}

TEST(Classify, Maximality) {
  EXPECT_EQ(classify(graph_of(3, {"a -> b", "b <- c"})).is_maximal, true);
  EXPECT_EQ(classify(graph_of(3, {"a -- b", "b -- c"})).is_maximal, true);
  // Lines and arcs alternating around a 4-cycle: a and b are not adjacent
  // yet no set separates them.
  const MixedGraph cycle = graph_of(4, {"a -- c", "a <-> d", "b <-> c", "b -- d"});
  ASSERT_TRUE(is_anterial(cycle));
  EXPECT_EQ(classify(cycle).is_maximal, false);
  for (NodeSet c : {NodeSet{}, s({2}), s({3}), s({2, 3})}) EXPECT_FALSE(separates(cycle, s({0}), s({1}), c));
}

TEST(Skeleton, DropsMarksAndMerges) {
  EXPECT_EQ(skeleton(graph_of(2, {"a -> b"})), graph_of(2, {"a -- b"}));
  EXPECT_EQ(skeleton(graph_of(2, {"a <-> b"})), graph_of(2, {"a -- b"}));
  EXPECT_EQ(skeleton(graph_of(3, {})), graph_of(3, {}));
  EXPECT_EQ(skeleton(graph_of(2, {"a <-> b", "a -> b"})), graph_of(2, {"a -- b"}));
}

TEST(AlignTo, ReordersNodes) {
  const MixedGraph g = graph_of(3, {"a -> c"});
  const NodeLabels target(std::vector<std::string>{"c", "b", "a"});
  const MixedGraph h = align_to(g, target);
  EXPECT_EQ(h.labels(), target);
  ASSERT_EQ(h.edges().size(), 1u);
  EXPECT_EQ(h.edges()[0].from, 2);
  EXPECT_EQ(h.edges()[0].to, 0);
  EXPECT_THROW(align_to(g, faithgraph::testing::letters(2)), InputError);
}
