#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "faithgraph/errors.hpp"
#include "faithgraph/independence_model.hpp"
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

MixedGraph path123() {
  MixedGraph g(NodeLabels(std::vector<std::string>{"1", "2", "3"}));
  g.add_edge("1", "2", EdgeKind::line);
  g.add_edge("2", "3", EdgeKind::line);
  return g;
}

std::vector<std::string> names(std::initializer_list<const char*> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

TEST(IndependenceModel, TrivialStatementsAlwaysHold) {
  const IndependenceModel j(faithgraph::testing::letters(3));
  EXPECT_TRUE(j.contains({}, s({1}), s({2})));
  EXPECT_TRUE(j.contains(s({0}), {}, {}));
  EXPECT_FALSE(j.contains(s({0}), s({1}), {}));
  EXPECT_EQ(j.statement_count(), 0u);
}

TEST(IndependenceModel, InsertIsSymmetricAndEraseUndoes) {
  IndependenceModel j(faithgraph::testing::letters(4));
  j.insert(s({0, 3}), s({1}), s({2}));
  EXPECT_TRUE(j.holds(s({1}), s({0, 3}), s({2})));
  EXPECT_EQ(j.statement_count(), 1u);
  j.erase(s({1}), s({0, 3}), s({2}));
  EXPECT_FALSE(j.holds(s({0, 3}), s({1}), s({2})));
  EXPECT_EQ(j.statement_count(), 0u);
}

TEST(IndependenceModel, ValidatesQueries) {
  const IndependenceModel j(faithgraph::testing::letters(3));
  EXPECT_THROW(j.contains(s({0}), s({0}), {}), InputError);
  EXPECT_THROW(j.contains(s({0}), s({1}), s({1})), InputError);
  EXPECT_THROW(j.contains(s({0}), s({5}), {}), InputError);
  const auto a = names({"a"});
  const auto z = names({"z"});
  EXPECT_THROW(j.contains(a, z, {}), InputError);
}

TEST(IndependenceModel, FullModelCountsEveryUnorderedTriple) {
  // Ground of 3: for each C the unordered pairs of disjoint non-empty A, B.
  // C = {} gives 6, each singleton C gives 1, so 9 in total.
  EXPECT_EQ(IndependenceModel::full(faithgraph::testing::letters(3)).statement_count(), 9u);
}

TEST(IndependenceModel, ForEachStatementOrder) {
  IndependenceModel j(faithgraph::testing::letters(3));
  j.insert(s({1}), s({2}), s({0}));
  j.insert(s({2}), s({0}), {});
  std::vector<Statement> seen;
  j.for_each_statement([&](const Statement& st) { seen.push_back(st); });
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_EQ(seen[0], (Statement{s({0}), s({2}), {}}));
  EXPECT_EQ(seen[1], (Statement{s({1}), s({2}), s({0})}));
}

TEST(InducedModel, PathHasOnlyTheSeparatingStatement) {
  const IndependenceModel j = induced_model(path123());
  EXPECT_TRUE(j.contains(names({"1"}), names({"3"}), names({"2"})));
  EXPECT_FALSE(j.contains(names({"1"}), names({"3"}), {}));
  int elementary = 0;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      if (i == k) continue;
      for_each_subset(j.ground().all() - s({i, k}), [&](NodeSet c) { elementary += j.holds(i, k, c); });
    }
  }
  // <1,3|2> and its mirror out of the 12 ordered elementary queries.
  EXPECT_EQ(elementary, 2);
  EXPECT_EQ(j.statement_count(), 1u);
}

TEST(InducedModel, CompleteAndEdgeless) {
  EXPECT_EQ(induced_model(graph_of(3, {"a -- b", "b -- c", "a -- c"})).statement_count(), 0u);
  EXPECT_TRUE(induced_model(graph_of(2, {})).holds(0, 1, {}));
}

TEST(InducedModel, ElementaryRouteMatchesDirectQueries) {
  faithgraph::testing::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const MixedGraph g = faithgraph::testing::random_mixed_graph(5, rng, 0.15);
    InducedModelOptions direct;
    direct.via_elementary = false;
    // Composition holds in J(G) for any mixed graph.
    EXPECT_EQ(induced_model(g), induced_model(g, direct));
    InducedModelOptions checked;
    checked.cross_check = true;
    EXPECT_NO_THROW(induced_model(g, checked));
  }
}

TEST(InducedModel, RespectsNodeCap) {
  InducedModelOptions options;
  options.limits.model_nodes = 3;
  EXPECT_THROW(induced_model(graph_of(4, {}), options), CapExceeded);
}

TEST(ModelFromElementary, UsesComposition) {
  const IndependenceModel j = model_from_elementary(faithgraph::testing::letters(3), [](int i, NodeSet c) {
    if (!c.empty()) return NodeSet{};
    return i == 0 ? s({1, 2}) : s({0});
  });
  EXPECT_TRUE(j.holds(s({0}), s({1, 2}), {}));
  EXPECT_TRUE(j.holds(s({1, 2}), s({0}), {}));
  EXPECT_FALSE(j.holds(s({1}), s({2}), {}));
}

TEST(MarkovEquivalent, Examples) {
  EXPECT_TRUE(markov_equivalent(graph_of(2, {"a -> b"}), graph_of(2, {"b -> a"})));
  EXPECT_FALSE(markov_equivalent(graph_of(3, {"a -> b", "b -> c"}), graph_of(3, {"a -> c", "b -> c"})));
  const MixedGraph g = graph_of(3, {"a -- b", "b <-> c"});
  EXPECT_TRUE(markov_equivalent(g, g));
  EXPECT_THROW(markov_equivalent(graph_of(2, {}), graph_of(3, {})), InputError);
}

TEST(Alpha, IdentityAndExamples) {
  const IndependenceModel chain = induced_model(graph_of(3, {"a -> b", "b -> c"}));
  EXPECT_EQ(alpha(chain, {}, {}), chain);
  const IndependenceModel m = alpha(chain, s({1}), {});
  EXPECT_EQ(m.ground_size(), 2);
  EXPECT_EQ(m.statement_count(), 0u);

  const IndependenceModel collider = induced_model(graph_of(3, {"a -> c", "b -> c"}));
  const IndependenceModel c = alpha(collider, {}, s({2}));
  EXPECT_EQ(c.ground().format(c.ground().all(), ","), "a,b");
  EXPECT_EQ(c.statement_count(), 0u);
  // Marginalizing the collider keeps <a,b|∅>.
  EXPECT_EQ(alpha(collider, s({2}), {}).statement_count(), 1u);

  EXPECT_THROW(alpha(chain, s({1}), s({1})), InputError);
}

TEST(Alpha, ComposesOverDisjointSets) {
  faithgraph::testing::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const IndependenceModel j = faithgraph::testing::random_model(5, rng, 0.3);
    const NodeSet all = j.ground().all();
    for_each_subset(all, [&](NodeSet m1) {
      for_each_subset(all - m1, [&](NodeSet c1) {
        if ((m1 | c1).size() > 2) return;
        const IndependenceModel once = alpha(j, m1, c1);
        // Re-express a second step in the reduced ground by label.
        const NodeSet rest = all - m1 - c1;
        for_each_subset(rest, [&](NodeSet m2) {
          for_each_subset(rest - m2, [&](NodeSet c2) {
            if ((m2 | c2).size() > 1) return;
            auto map = [&](NodeSet x) {
              std::vector<std::string> labels;
              for (int v : x) labels.push_back(j.ground().name(v));
              return once.ground().set_of(labels);
            };
            EXPECT_EQ(alpha(once, map(m2), map(c2)), alpha(j, m1 | m2, c1 | c2));
          });
        });
      });
    });
  }
}

TEST(AlignTo, ReordersGround) {
  IndependenceModel j(faithgraph::testing::letters(3));
  j.insert(s({0}), s({2}), s({1}));
  const IndependenceModel r = align_to(j, NodeLabels(std::vector<std::string>{"c", "b", "a"}));
  EXPECT_TRUE(r.holds(s({2}), s({0}), s({1})));
  EXPECT_EQ(r.statement_count(), 1u);
  EXPECT_THROW(align_to(j, faithgraph::testing::letters(2)), InputError);
}
