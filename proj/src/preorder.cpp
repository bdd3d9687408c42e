#include "faithgraph/preorder.hpp"

#include <array>
#include <set>
#include <string>

#include "faithgraph/errors.hpp"
#include "faithgraph/faithfulness.hpp"

namespace faithgraph {

namespace {

std::string pair_text(int a, int b) { return std::to_string(a) + " and " + std::to_string(b); }

}  // namespace

Preorder Preorder::from_relation(std::vector<NodeSet> up) {
  const int n = static_cast<int>(up.size());
  const NodeSet all = NodeSet::first(n);
  for (int a = 0; a < n; ++a) {
    const NodeSet ua = up[static_cast<std::size_t>(a)];
    if (!ua.subset_of(all)) throw InputError("preorder relates node " + std::to_string(a) + " to an unknown node");
    if (!ua.contains(a)) throw InputError("preorder is not reflexive at node " + std::to_string(a));
    for (int b : ua) {
      const NodeSet ub = up[static_cast<std::size_t>(b)];
      if (!ub.subset_of(ua)) {
        throw InputError("preorder is not transitive: " + std::to_string(a) + " ≼ " +
                         std::to_string(b) + " ≼ " + std::to_string((ub - ua).lowest()) + " but not " +
                         pair_text(a, (ub - ua).lowest()) + " related");
      }
    }
  }
  return Preorder(std::move(up));
}

Preorder Preorder::all_equivalent(int n) {
  return Preorder(std::vector<NodeSet>(static_cast<std::size_t>(n), NodeSet::first(n)));
}

Preorder Preorder::all_incomparable(int n) {
  std::vector<NodeSet> up;
  for (int a = 0; a < n; ++a) up.push_back(NodeSet::of(a));
  return Preorder(std::move(up));
}

Preorder Preorder::from_classes(int n, const std::vector<NodeSet>& classes,
                                const std::vector<std::pair<int, int>>& class_less) {
  const auto k = classes.size();
  NodeSet covered;
  for (NodeSet c : classes) {
    if (c.empty()) throw InputError("preorder classes must be non-empty");
    if (!(covered & c).empty()) {
      throw InputError("node " + std::to_string((covered & c).lowest()) + " is in two classes");
    }
    covered |= c;
  }
  if (covered != NodeSet::first(n)) throw InputError("preorder classes do not cover every node");

  // reach[x][y]: class x ≤ class y after closure.
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (std::size_t x = 0; x < k; ++x) reach[x][x] = true;
  for (auto [lo, hi] : class_less) {
    if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= k || static_cast<std::size_t>(hi) >= k) {
      throw InputError("order relation refers to an unknown class");
    }
    reach[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = true;
  }
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t x = 0; x < k; ++x) {
      if (!reach[x][m]) continue;
      for (std::size_t y = 0; y < k; ++y) {
        if (reach[m][y]) reach[x][y] = true;
      }
    }
  }
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = x + 1; y < k; ++y) {
      if (reach[x][y] && reach[y][x]) {
        throw InputError("order relations form a cycle between classes " + std::to_string(x) +
                         " and " + std::to_string(y));
      }
    }
  }

  std::vector<NodeSet> up(static_cast<std::size_t>(n));
  for (std::size_t x = 0; x < k; ++x) {
    NodeSet above;
    for (std::size_t y = 0; y < k; ++y) {
      if (reach[x][y]) above |= classes[y];
    }
    for (int a : classes[x]) up[static_cast<std::size_t>(a)] = above;
  }
  return Preorder(std::move(up));
}

NodeSet Preorder::class_of(int a) const noexcept {
  NodeSet out;
  for (int b : up_set(a)) {
    if (leq(b, a)) out = out.with(b);
  }
  return out;
}

bool Preorder::is_partial_order() const noexcept {
  for (int a = 0; a < size(); ++a) {
    if (class_of(a).size() != 1) return false;
  }
  return true;
}

QuotientOrder quotient(const Preorder& p) {
  QuotientOrder q;
  NodeSet assigned;
  std::vector<int> class_index(static_cast<std::size_t>(p.size()), -1);
  for (int a = 0; a < p.size(); ++a) {
    if (assigned.contains(a)) continue;
    const NodeSet cls = p.class_of(a);
    for (int b : cls) class_index[static_cast<std::size_t>(b)] = static_cast<int>(q.classes.size());
    q.classes.push_back(cls);
    assigned |= cls;
  }
  const auto k = q.classes.size();
  q.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      q.leq[x][y] = p.leq(q.classes[x].lowest(), q.classes[y].lowest());
    }
  }
  for (std::size_t x = 0; x < k; ++x) {
    if (!q.leq[x][x]) throw InternalError("quotient order is not reflexive");
    for (std::size_t y = 0; y < k; ++y) {
      if (x != y && q.leq[x][y] && q.leq[y][x]) throw InternalError("quotient order is not antisymmetric");
      for (std::size_t z = 0; z < k; ++z) {
        if (q.leq[x][y] && q.leq[y][z] && !q.leq[x][z]) {
          throw InternalError("quotient order is not transitive");
        }
      }
    }
  }
  return q;
}

bool is_valid_for(const Preorder& p, const MixedGraph& g) {
  if (p.size() != g.node_count()) {
    throw InputError("preorder has " + std::to_string(p.size()) + " nodes, graph has " +
                     std::to_string(g.node_count()));
  }
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::line:
        if (!p.equivalent(e.from, e.to)) return false;
        break;
      case EdgeKind::arrow:
        if (!p.less(e.to, e.from)) return false;
        break;
      case EdgeKind::arc:
        if (!p.incomparable(e.from, e.to)) return false;
        break;
    }
  }
  return true;
}

Preorder minimal_preorder(const MixedGraph& g) {
  const auto ant = all_anteriors(g);
  const auto& names = g.labels();
  for (const Edge& e : g.edges()) {
    const NodeSet ant_from = ant[static_cast<std::size_t>(e.from)];
    const NodeSet ant_to = ant[static_cast<std::size_t>(e.to)];
    if (e.kind == EdgeKind::arrow && ant_from.contains(e.to)) {
      throw InputError("graph is not anterial: semi-directed cycle through " + names.name(e.from) +
                       " -> " + names.name(e.to));
    }
    if (e.kind == EdgeKind::arc && (ant_from.contains(e.to) || ant_to.contains(e.from))) {
      throw InputError("graph is not anterial: arc " + names.name(e.from) + " <-> " +
                       names.name(e.to) + " joins an anterior of its other endpoint");
    }
  }
  std::vector<NodeSet> up;
  up.reserve(ant.size());
  for (int j = 0; j < g.node_count(); ++j) up.push_back(ant[static_cast<std::size_t>(j)].with(j));
  return Preorder::from_relation(std::move(up));
}

MixedGraph direct_skeleton(const MixedGraph& sk, const Preorder& p) {
  if (p.size() != sk.node_count()) {
    throw InputError("preorder has " + std::to_string(p.size()) + " nodes, skeleton has " +
                     std::to_string(sk.node_count()));
  }
  MixedGraph out(sk.labels());
  for (int i = 0; i < sk.node_count(); ++i) {
    for (int j = i + 1; j < sk.node_count(); ++j) {
      if (!sk.adjacent(i, j)) continue;
      if (p.equivalent(i, j)) {
        out.add_edge(i, j, EdgeKind::line);
      } else if (p.less(j, i)) {
        out.add_edge(i, j, EdgeKind::arrow);
      } else if (p.less(i, j)) {
        out.add_edge(j, i, EdgeKind::arrow);
      } else {
        out.add_edge(i, j, EdgeKind::arc);
      }
    }
  }
  return out;
}

bool is_compatible(const Preorder& p, const IndependenceModel& model) {
  const MixedGraph g = direct_skeleton(model_skeleton(model), p);
  if (!is_anterial(g)) return false;
  return minimal_preorder(g) == p;
}

SkeletonDirectings::SkeletonDirectings(const MixedGraph& skeleton) : labels_(skeleton.labels()) {
  for (int i = 0; i < skeleton.node_count(); ++i) {
    for (int j = i + 1; j < skeleton.node_count(); ++j) {
      if (skeleton.adjacent(i, j)) edges_.emplace_back(i, j);
    }
  }
}

std::uint64_t SkeletonDirectings::count() const noexcept {
  return std::uint64_t{1} << (2 * edges_.size());
}

SkeletonDirectings::Direction SkeletonDirectings::digit(std::uint64_t assignment,
                                                        std::size_t edge) const noexcept {
  const std::size_t shift = 2 * (edges_.size() - 1 - edge);
  return static_cast<Direction>((assignment >> shift) & 3u);
}

std::uint64_t SkeletonDirectings::arrows_only(std::uint64_t orientation) const noexcept {
  std::uint64_t assignment = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const std::uint64_t d = ((orientation >> e) & 1u) ? kBackward : kForward;
    assignment |= d << (2 * (edges_.size() - 1 - e));
  }
  return assignment;
}

MixedGraph SkeletonDirectings::graph(std::uint64_t assignment) const {
  MixedGraph g(labels_);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [i, j] = edges_[e];
    switch (digit(assignment, e)) {
      case kLine: g.add_edge(i, j, EdgeKind::line); break;
      case kForward: g.add_edge(i, j, EdgeKind::arrow); break;
      case kBackward: g.add_edge(j, i, EdgeKind::arrow); break;
      case kArc: g.add_edge(i, j, EdgeKind::arc); break;
    }
  }
  return g;
}

std::optional<Preorder> SkeletonDirectings::minimal_preorder(std::uint64_t assignment) const {
  const int n = labels_.size();
  std::array<NodeSet, NodeSet::kCapacity> pred{};  // lines and arrow tails into v
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [i, j] = edges_[e];
    switch (digit(assignment, e)) {
      case kLine:
        pred[static_cast<std::size_t>(i)] = pred[static_cast<std::size_t>(i)].with(j);
        pred[static_cast<std::size_t>(j)] = pred[static_cast<std::size_t>(j)].with(i);
        break;
      case kForward: pred[static_cast<std::size_t>(j)] = pred[static_cast<std::size_t>(j)].with(i); break;
      case kBackward: pred[static_cast<std::size_t>(i)] = pred[static_cast<std::size_t>(i)].with(j); break;
      case kArc: break;
    }
  }
  std::vector<NodeSet> up(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    NodeSet reached;
    NodeSet frontier = NodeSet::of(j);
    while (!frontier.empty()) {
      NodeSet next;
      for (int v : frontier) next |= pred[static_cast<std::size_t>(v)];
      frontier = next - reached;
      reached |= next;
    }
    up[static_cast<std::size_t>(j)] = reached.with(j);  // ant(j) plus j
  }
  auto ant_contains = [&](int j, int i) { return i != j && up[static_cast<std::size_t>(j)].contains(i); };
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [i, j] = edges_[e];
    switch (digit(assignment, e)) {
      case kLine: break;
      case kForward:
        if (ant_contains(i, j)) return std::nullopt;
        break;
      case kBackward:
        if (ant_contains(j, i)) return std::nullopt;
        break;
      case kArc:
        if (ant_contains(i, j) || ant_contains(j, i)) return std::nullopt;
        break;
    }
  }
  // A line inside a semi-directed cycle is caught by the arrow on that
  // cycle, so the relation built here is the minimal preorder.
  return Preorder::from_relation(std::move(up));
}

void for_each_compatible_preorder(const IndependenceModel& model,
                                  const std::function<void(const Preorder&)>& sink,
                                  const EnumerationOptions& options) {
  const SkeletonDirectings directings(model_skeleton(model));
  require_within(static_cast<int>(directings.edge_count()), options.limits.skeleton_edges,
                 Limits::kSkeletonEdgesHard, "skeleton edge count for preorder enumeration");
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t k = 0; k < directings.count(); ++k) {
    auto p = directings.minimal_preorder(k);
    if (!p) continue;
    std::vector<std::uint32_t> key;
    key.reserve(p->relation().size());
    for (NodeSet s : p->relation()) key.push_back(s.bits());
    if (!seen.insert(std::move(key)).second) continue;
    sink(*p);
  }
}

std::vector<Preorder> enumerate_compatible_preorders(const IndependenceModel& model,
                                                     const EnumerationOptions& options) {
  std::vector<Preorder> out;
  for_each_compatible_preorder(model, [&](const Preorder& p) { out.push_back(p); }, options);
  return out;
}

}  // namespace faithgraph
