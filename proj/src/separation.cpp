#include "faithgraph/separation.hpp"

#include <algorithm>
#include <set>

#include "faithgraph/errors.hpp"

namespace faithgraph {

namespace {

constexpr int mark_bit(EdgeMark m) { return m == EdgeMark::head ? 1 : 0; }

int state_of(int v, EdgeMark m, bool touched) { return v * 4 + mark_bit(m) * 2 + (touched ? 1 : 0); }

void require_disjoint(const MixedGraph& g, NodeSet x, NodeSet y, const char* what) {
  const NodeSet shared = x & y;
  if (!shared.empty()) {
    throw InputError(std::string(what) + " share node '" + g.labels().name(shared.lowest()) + "'");
  }
}

}  // namespace

NodeSet connected_given(const MixedGraph& g, NodeSet from, NodeSet given) {
  const int n = g.node_count();
  std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(4 * n));

  auto push = [&](int v, EdgeMark m, bool touched) {
    const int s = state_of(v, m, touched);
    if (seen[static_cast<std::size_t>(s)]) return;
    seen[static_cast<std::size_t>(s)] = 1;
    queue.push_back(s);
  };

  // A walk's first section has no flanking edge on its left, which counts
  // as a tail: it can never be a collider.
  for (int a : from) push(a, EdgeMark::tail, given.contains(a));

  NodeSet reached;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int s = queue[head];
    const int v = s / 4;
    const EdgeMark entry = (s & 2) ? EdgeMark::head : EdgeMark::tail;
    const bool touched = (s & 1) != 0;

    // Ending here closes a non-collider section.
    if (!touched) reached = reached.with(v);

    for (int ei : g.incident(v)) {
      const Edge& e = g.edges()[static_cast<std::size_t>(ei)];
      const int w = e.other(v);
      if (e.kind == EdgeKind::line) {
        push(w, entry, touched || given.contains(w));
        continue;
      }
      const bool collider = entry == EdgeMark::head && e.mark_at(v) == EdgeMark::head;
      if (collider != touched) continue;
      push(w, e.mark_at(w), given.contains(w));
    }
  }
  return reached;
}

bool separates(const MixedGraph& g, NodeSet a, NodeSet b, NodeSet c) {
  const NodeSet all = g.nodes();
  if (!a.subset_of(all) || !b.subset_of(all) || !c.subset_of(all)) {
    throw InputError("separation query refers to nodes outside the graph");
  }
  if (a.empty() || b.empty()) throw InputError("separation query needs non-empty A and B");
  require_disjoint(g, a, b, "A and B");
  require_disjoint(g, a, c, "A and C");
  require_disjoint(g, b, c, "B and C");
  return (connected_given(g, a, c) & b).empty();
}

bool is_well_formed(const MixedGraph& g, const Walk& walk) {
  if (walk.nodes.size() != walk.edges.size() + 1) return false;
  for (int v : walk.nodes) {
    if (v < 0 || v >= g.node_count()) return false;
  }
  for (std::size_t k = 0; k < walk.edges.size(); ++k) {
    const int ei = walk.edges[k];
    if (ei < 0 || static_cast<std::size_t>(ei) >= g.edges().size()) return false;
    const Edge& e = g.edges()[static_cast<std::size_t>(ei)];
    const int u = walk.nodes[k];
    const int w = walk.nodes[k + 1];
    if (!(e.from == u && e.to == w) && !(e.from == w && e.to == u)) return false;
  }
  return true;
}

namespace {

struct Section {
  std::size_t first;  // position of the first node in walk.nodes
  std::size_t last;   // position of the last node
};

// Splits a walk into its maximal all-line subwalks. Consecutive sections
// share no node positions; a position between two non-line edges forms a
// single-node section.
std::vector<Section> sections_of(const MixedGraph& g, const Walk& walk) {
  std::vector<Section> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k < walk.edges.size(); ++k) {
    const Edge& e = g.edges()[static_cast<std::size_t>(walk.edges[k])];
    if (e.kind != EdgeKind::line) {
      out.push_back({start, k});
      start = k + 1;
    }
  }
  out.push_back({start, walk.nodes.size() - 1});
  return out;
}

bool section_meets(const Walk& walk, const Section& s, NodeSet given) {
  for (std::size_t p = s.first; p <= s.last; ++p) {
    if (given.contains(walk.nodes[p])) return true;
  }
  return false;
}

// Arrowhead at the section end from the flanking edge, if that edge exists.
bool head_before(const MixedGraph& g, const Walk& walk, const Section& s) {
  if (s.first == 0) return false;
  const Edge& e = g.edges()[static_cast<std::size_t>(walk.edges[s.first - 1])];
  return e.mark_at(walk.nodes[s.first]) == EdgeMark::head;
}

bool head_after(const MixedGraph& g, const Walk& walk, const Section& s) {
  if (s.last == walk.edges.size()) return false;
  const Edge& e = g.edges()[static_cast<std::size_t>(walk.edges[s.last])];
  return e.mark_at(walk.nodes[s.last]) == EdgeMark::head;
}

// True when no already-determined section of the prefix breaks the
// definition. The trailing section is open: it may still become a collider
// if its left flank is an arrowhead, so it only has to avoid `given` when it
// cannot.
bool prefix_viable(const MixedGraph& g, const Walk& walk, NodeSet given) {
  const auto secs = sections_of(g, walk);
  for (std::size_t s = 0; s + 1 < secs.size(); ++s) {
    const bool collider = head_before(g, walk, secs[s]) && head_after(g, walk, secs[s]);
    if (collider != section_meets(walk, secs[s], given)) return false;
  }
  const Section& open = secs.back();
  if (!head_before(g, walk, open) && section_meets(walk, open, given)) return false;
  return true;
}

// What an extension of a viable prefix can still do depends on where it
// ends, how its open section was entered and which nodes that section holds.
struct PrefixKey {
  int node;
  int flank_edge;     // -1 for the first section
  int section_start;  // node that opened the section
  std::uint32_t section_nodes;
  friend auto operator<=>(const PrefixKey&, const PrefixKey&) = default;
};

struct Prefix {
  int parent;  // index into the prefix list, -1 for a start node
  int edge;
  int node;
  PrefixKey key;
};

Walk rebuild(const std::vector<Prefix>& prefixes, int at) {
  Walk walk;
  for (int p = at; p >= 0; p = prefixes[static_cast<std::size_t>(p)].parent) {
    walk.nodes.push_back(prefixes[static_cast<std::size_t>(p)].node);
    if (prefixes[static_cast<std::size_t>(p)].parent >= 0) {
      walk.edges.push_back(prefixes[static_cast<std::size_t>(p)].edge);
    }
  }
  std::reverse(walk.nodes.begin(), walk.nodes.end());
  std::reverse(walk.edges.begin(), walk.edges.end());
  return walk;
}

}  // namespace

bool is_connecting_walk(const MixedGraph& g, const Walk& walk, NodeSet given) {
  if (!is_well_formed(g, walk)) return false;
  for (const Section& s : sections_of(g, walk)) {
    const bool collider = head_before(g, walk, s) && head_after(g, walk, s);
    if (collider != section_meets(walk, s, given)) return false;
  }
  return true;
}

std::optional<Walk> connecting_walk_oracle(const MixedGraph& g, NodeSet a, NodeSet b, NodeSet c,
                                           int max_len) {
  // Walks are enumerated shortest first. Two prefixes with the same key
  // have the same viable extensions, so only the first is extended.
  std::vector<Prefix> prefixes;
  std::set<PrefixKey> seen;
  for (int start : a) {
    PrefixKey key{start, -1, start, NodeSet::of(start).bits()};
    if (seen.insert(key).second) prefixes.push_back({-1, -1, start, key});
  }
  std::size_t layer_begin = 0;
  for (int len = 0;; ++len) {
    const std::size_t layer_end = prefixes.size();
    for (std::size_t p = layer_begin; p < layer_end; ++p) {
      const Walk walk = rebuild(prefixes, static_cast<int>(p));
      if (b.contains(walk.nodes.back()) && is_connecting_walk(g, walk, c)) return walk;
    }
    if (len >= max_len || layer_begin == layer_end) return std::nullopt;
    for (std::size_t p = layer_begin; p < layer_end; ++p) {
      Walk walk = rebuild(prefixes, static_cast<int>(p));
      const PrefixKey here = prefixes[p].key;
      const int v = here.node;
      for (int ei : g.incident(v)) {
        const Edge& e = g.edges()[static_cast<std::size_t>(ei)];
        const int w = e.other(v);
        walk.edges.push_back(ei);
        walk.nodes.push_back(w);
        if (prefix_viable(g, walk, c)) {
          PrefixKey key = e.kind == EdgeKind::line
                              ? PrefixKey{w, here.flank_edge, here.section_start,
                                          here.section_nodes | NodeSet::of(w).bits()}
                              : PrefixKey{w, ei, w, NodeSet::of(w).bits()};
          if (seen.insert(key).second) prefixes.push_back({static_cast<int>(p), ei, w, key});
        }
        walk.edges.pop_back();
        walk.nodes.pop_back();
      }
    }
    layer_begin = layer_end;
  }
}

}  // namespace faithgraph
