#include "faithgraph/independence_model.hpp"

#include <algorithm>

#include "faithgraph/errors.hpp"
#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/separation.hpp"

namespace faithgraph {

Limits Limits::with_node_cap(int nodes) const {
  Limits out = *this;
  out.model_nodes = std::clamp(nodes, 0, kModelNodesHard);
  out.full_axiom_nodes = std::clamp(nodes, 0, kFullAxiomNodesHard);
  out.elementary_axiom_nodes = std::clamp(nodes, 0, kElementaryAxiomNodesHard);
  return out;
}

Limits Limits::with_edge_cap(int edges) const {
  Limits out = *this;
  out.skeleton_edges = std::clamp(edges, 0, kSkeletonEdgesHard);
  return out;
}

void require_within(int nodes, int cap, int hard_cap, const char* what) {
  if (nodes <= cap) return;
  throw CapExceeded(std::string(what) + ": " + std::to_string(nodes) + " exceeds the cap of " +
                    std::to_string(cap) + " (hard limit " + std::to_string(hard_cap) + ")");
}

IndependenceModel::IndependenceModel(NodeLabels ground) : ground_(std::move(ground)) {
  require_within(ground_.size(), kMaxGround, kMaxGround, "independence model ground size");
  const std::uint64_t triples = std::uint64_t{1} << (2 * ground_.size());
  bits_.assign(static_cast<std::size_t>((triples + 63) / 64), 0);
}

IndependenceModel IndependenceModel::full(NodeLabels ground) {
  IndependenceModel m(std::move(ground));
  constexpr std::uint64_t low = 0x5555555555555555ull;
  const std::uint64_t triples = std::uint64_t{1} << (2 * m.ground_.size());
  for (std::uint64_t i = 0; i < triples; ++i) {
    const bool has_a = (i & ~(i >> 1) & low) != 0;
    const bool has_b = ((i >> 1) & ~i & low) != 0;
    if (has_a && has_b) m.assign_bit(i, true);
  }
  return m;
}

void IndependenceModel::validate(NodeSet a, NodeSet b, NodeSet c) const {
  const NodeSet all = ground_.all();
  for (NodeSet s : {a, b, c}) {
    if (!s.subset_of(all)) throw InputError("statement refers to nodes outside the ground set");
  }
  auto check = [&](NodeSet x, NodeSet y) {
    const NodeSet shared = x & y;
    if (!shared.empty()) {
      throw InputError("statement sets are not disjoint: node '" + ground_.name(shared.lowest()) +
                       "' appears twice");
    }
  };
  check(a, b);
  check(a, c);
  check(b, c);
}

bool IndependenceModel::contains(NodeSet a, NodeSet b, NodeSet c) const {
  validate(a, b, c);
  return holds(a, b, c);
}

bool IndependenceModel::contains(std::span<const std::string> a, std::span<const std::string> b,
                                 std::span<const std::string> c) const {
  return contains(ground_.set_of(a), ground_.set_of(b), ground_.set_of(c));
}

void IndependenceModel::set(NodeSet a, NodeSet b, NodeSet c, bool present) {
  validate(a, b, c);
  if (a.empty() || b.empty()) return;
  assign_bit(index_of(a, b, c), present);
  assign_bit(index_of(b, a, c), present);
}

void IndependenceModel::insert(NodeSet a, NodeSet b, NodeSet c) { set(a, b, c, true); }

void IndependenceModel::erase(NodeSet a, NodeSet b, NodeSet c) { set(a, b, c, false); }

void IndependenceModel::for_each_statement(const std::function<void(const Statement&)>& fn) const {
  const NodeSet all = ground_.all();
  for_each_subset(all, [&](NodeSet c) {
    const NodeSet rest = all - c;
    for_each_nonempty_subset(rest, [&](NodeSet a) {
      for_each_nonempty_subset(rest - a, [&](NodeSet b) {
        if (a.bits() < b.bits() && holds(a, b, c)) fn(Statement{a, b, c});
      });
    });
  });
}

std::size_t IndependenceModel::statement_count() const {
  std::size_t count = 0;
  for_each_statement([&](const Statement&) { ++count; });
  return count;
}

bool IndependenceModel::subset_of(const IndependenceModel& other) const {
  if (!(ground_ == other.ground_)) throw InputError("models are over different ground sets");
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

IndependenceModel model_from_elementary(
    NodeLabels ground, const std::function<NodeSet(int i, NodeSet c)>& independent_of) {
  IndependenceModel model(std::move(ground));
  const int n = model.ground_size();
  const NodeSet all = model.ground().all();
  std::vector<NodeSet> indep(static_cast<std::size_t>(n));
  // common[A] = nodes independent of every member of A, built incrementally
  // by peeling off the lowest member.
  std::vector<NodeSet> common(std::size_t{1} << n);
  for_each_subset(all, [&](NodeSet c) {
    const NodeSet rest = all - c;
    for (int i : rest) indep[static_cast<std::size_t>(i)] = independent_of(i, c) & (rest.without(i));
    common[0] = rest;
    for_each_nonempty_subset(rest, [&](NodeSet a) {
      const int low = a.lowest();
      const NodeSet shared = common[a.without(low).bits()] & indep[static_cast<std::size_t>(low)];
      common[a.bits()] = shared;
      for_each_nonempty_subset(shared - a, [&](NodeSet b) { model.insert_unchecked(a, b, c); });
    });
  });
  return model;
}

IndependenceModel induced_model(const MixedGraph& g, const InducedModelOptions& options) {
  require_within(g.node_count(), options.limits.model_nodes, Limits::kModelNodesHard,
                 "induced model node count");
  const NodeSet all = g.nodes();
  IndependenceModel model(g.labels());
  if (options.via_elementary) {
    model = model_from_elementary(g.labels(), [&](int i, NodeSet c) {
      return all - c - connected_given(g, NodeSet::of(i), c);
    });
  } else {
    for_each_subset(all, [&](NodeSet c) {
      const NodeSet rest = all - c;
      for_each_nonempty_subset(rest, [&](NodeSet a) {
        const NodeSet reach = connected_given(g, a, c);
        for_each_nonempty_subset(rest - a - reach, [&](NodeSet b) { model.insert_unchecked(a, b, c); });
      });
    });
  }
  if (options.cross_check) {
    for_each_subset(all, [&](NodeSet c) {
      const NodeSet rest = all - c;
      for_each_nonempty_subset(rest, [&](NodeSet a) {
        for_each_nonempty_subset(rest - a, [&](NodeSet b) {
          if (model.holds(a, b, c) != separates(g, a, b, c)) {
            throw InternalError("induced model disagrees with separation for <" +
                                g.labels().format(a, ",") + " | " + g.labels().format(b, ",") +
                                " | " + g.labels().format(c, ",") + ">");
          }
        });
      });
    });
  }
  return model;
}

bool markov_equivalent(const MixedGraph& g1, const MixedGraph& g2, const Limits& limits) {
  const MixedGraph aligned = align_to(g2, g1.labels());
  InducedModelOptions options;
  options.limits = limits;
  return induced_model(g1, options) == induced_model(aligned, options);
}

IndependenceModel alpha(const IndependenceModel& model, NodeSet marginalize, NodeSet condition) {
  const NodeSet all = model.ground().all();
  if (!marginalize.subset_of(all) || !condition.subset_of(all)) {
    throw InputError("marginalized and conditioned sets must lie inside the ground set");
  }
  if (!(marginalize & condition).empty()) {
    throw InputError("node '" + model.ground().name((marginalize & condition).lowest()) +
                     "' is both marginalized and conditioned on");
  }
  const NodeSet kept = all - marginalize - condition;
  std::vector<int> original;  // new index -> old index
  NodeLabels labels;
  for (int v : kept) {
    labels.add(model.ground().name(v));
    original.push_back(v);
  }
  auto lift = [&](NodeSet s) {
    NodeSet out;
    for (int v : s) out = out.with(original[static_cast<std::size_t>(v)]);
    return out;
  };

  IndependenceModel out(labels);
  const NodeSet local = labels.all();
  for_each_subset(local, [&](NodeSet d) {
    const NodeSet rest = local - d;
    const NodeSet lifted_d = lift(d) | condition;
    for_each_nonempty_subset(rest, [&](NodeSet a) {
      const NodeSet lifted_a = lift(a);
      for_each_nonempty_subset(rest - a, [&](NodeSet b) {
        if (a.bits() < b.bits() && model.holds(lifted_a, lift(b), lifted_d)) out.insert_unchecked(a, b, d);
      });
    });
  });
  return out;
}

IndependenceModel align_to(const IndependenceModel& model, const NodeLabels& labels) {
  if (!model.ground().same_members(labels)) {
    throw InputError("ground sets differ: model has {" +
                     model.ground().format(model.ground().all(), ", ") + "}, expected {" +
                     labels.format(labels.all(), ", ") + "}");
  }
  if (model.ground() == labels) return model;
  std::vector<int> target(static_cast<std::size_t>(labels.size()));
  for (int v = 0; v < model.ground_size(); ++v) {
    target[static_cast<std::size_t>(v)] = labels.index_of(model.ground().name(v));
  }
  auto move = [&](NodeSet s) {
    NodeSet out;
    for (int v : s) out = out.with(target[static_cast<std::size_t>(v)]);
    return out;
  };
  IndependenceModel out(labels);
  model.for_each_statement([&](const Statement& s) { out.insert_unchecked(move(s.a), move(s.b), move(s.c)); });
  return out;
}

}  // namespace faithgraph
