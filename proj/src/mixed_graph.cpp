#include "faithgraph/mixed_graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "faithgraph/errors.hpp"
#include "faithgraph/separation.hpp"

namespace faithgraph {

std::string_view to_string(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::line: return "--";
    case EdgeKind::arrow: return "->";
    case EdgeKind::arc: return "<->";
  }
  return "?";
}

MixedGraph::MixedGraph(NodeLabels labels)
    : labels_(std::move(labels)), incident_(static_cast<std::size_t>(labels_.size())) {}

int MixedGraph::add_node(std::string label) {
  const int index = labels_.add(std::move(label));
  incident_.emplace_back();
  return index;
}

void MixedGraph::add_edge(int from, int to, EdgeKind kind) {
  if (from < 0 || to < 0 || from >= node_count() || to >= node_count()) {
    throw InputError("edge endpoint out of range");
  }
  if (from == to) throw InputError("loop at node '" + labels_.name(from) + "' is not allowed");
  const int index = static_cast<int>(edges_.size());
  edges_.push_back(Edge{from, to, kind});
  incident_[static_cast<std::size_t>(from)].push_back(index);
  incident_[static_cast<std::size_t>(to)].push_back(index);
}

void MixedGraph::add_edge(std::string_view from, std::string_view to, EdgeKind kind) {
  add_edge(labels_.index_of(from), labels_.index_of(to), kind);
}

bool MixedGraph::adjacent(int u, int v) const { return neighbours(u).contains(v); }

NodeSet MixedGraph::neighbours(int v) const {
  NodeSet out;
  for (int e : incident(v)) out = out.with(edges_[static_cast<std::size_t>(e)].other(v));
  return out;
}

MixedGraph::Masks MixedGraph::masks() const {
  const auto n = static_cast<std::size_t>(node_count());
  Masks m{std::vector<NodeSet>(n), std::vector<NodeSet>(n), std::vector<NodeSet>(n),
          std::vector<NodeSet>(n)};
  for (const Edge& e : edges_) {
    const auto u = static_cast<std::size_t>(e.from);
    const auto w = static_cast<std::size_t>(e.to);
    switch (e.kind) {
      case EdgeKind::line:
        m.lines[u] = m.lines[u].with(e.to);
        m.lines[w] = m.lines[w].with(e.from);
        break;
      case EdgeKind::arc:
        m.arcs[u] = m.arcs[u].with(e.to);
        m.arcs[w] = m.arcs[w].with(e.from);
        break;
      case EdgeKind::arrow:
        m.children[u] = m.children[u].with(e.to);
        m.parents[w] = m.parents[w].with(e.from);
        break;
    }
  }
  return m;
}

namespace {

// Edge identity independent of insertion order: (kind, endpoints), with the
// endpoints of symmetric edges sorted.
std::tuple<int, int, int> edge_key(const Edge& e) {
  int a = e.from;
  int b = e.to;
  if (e.kind != EdgeKind::arrow && a > b) std::swap(a, b);
  return {static_cast<int>(e.kind), a, b};
}

std::vector<std::tuple<int, int, int>> sorted_keys(const MixedGraph& g) {
  std::vector<std::tuple<int, int, int>> keys;
  keys.reserve(g.edges().size());
  for (const Edge& e : g.edges()) keys.push_back(edge_key(e));
  std::sort(keys.begin(), keys.end());
  return keys;
}

NodeSet backward_closure(const std::vector<NodeSet>& pred_a, const std::vector<NodeSet>* pred_b,
                         int j) {
  NodeSet reached;
  NodeSet frontier = NodeSet::of(j);
  while (!frontier.empty()) {
    NodeSet next;
    for (int v : frontier) {
      next |= pred_a[static_cast<std::size_t>(v)];
      if (pred_b) next |= (*pred_b)[static_cast<std::size_t>(v)];
    }
    frontier = next - reached;
    reached |= next;
  }
  return reached.without(j);
}

}  // namespace

bool operator==(const MixedGraph& a, const MixedGraph& b) {
  return a.labels_ == b.labels_ && sorted_keys(a) == sorted_keys(b);
}

MixedGraph align_to(const MixedGraph& g, const NodeLabels& labels) {
  if (!g.labels().same_members(labels)) {
    throw InputError("node sets differ: graph has {" + g.labels().format(g.nodes(), ", ") +
                     "}, expected {" + labels.format(labels.all(), ", ") + "}");
  }
  if (g.labels() == labels) return g;
  MixedGraph out(labels);
  for (const Edge& e : g.edges()) {
    out.add_edge(labels.index_of(g.labels().name(e.from)), labels.index_of(g.labels().name(e.to)),
                 e.kind);
  }
  return out;
}

NodeSet anteriors(const MixedGraph& g, int j) {
  if (j < 0 || j >= g.node_count()) throw InputError("node index out of range");
  const auto m = g.masks();
  return backward_closure(m.lines, &m.parents, j);
}

NodeSet anteriors(const MixedGraph& g, std::string_view label) {
  return anteriors(g, g.labels().index_of(label));
}

NodeSet ancestors(const MixedGraph& g, int j) {
  if (j < 0 || j >= g.node_count()) throw InputError("node index out of range");
  const auto m = g.masks();
  return backward_closure(m.parents, nullptr, j);
}

NodeSet ancestors(const MixedGraph& g, std::string_view label) {
  return ancestors(g, g.labels().index_of(label));
}

std::vector<NodeSet> all_anteriors(const MixedGraph& g) {
  const auto m = g.masks();
  std::vector<NodeSet> out;
  out.reserve(static_cast<std::size_t>(g.node_count()));
  for (int j = 0; j < g.node_count(); ++j) out.push_back(backward_closure(m.lines, &m.parents, j));
  return out;
}

namespace {

bool is_simple_graph(const MixedGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

// A semi-directed cycle exists iff some arrow u -> w has w anterior to u.
bool cmg_given(const MixedGraph& g, const std::vector<NodeSet>& ant) {
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::arrow && ant[static_cast<std::size_t>(e.from)].contains(e.to)) {
      return false;
    }
  }
  return true;
}

bool anterial_given(const MixedGraph& g, const std::vector<NodeSet>& ant) {
  if (!cmg_given(g, ant)) return false;
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::arc) continue;
    if (ant[static_cast<std::size_t>(e.from)].contains(e.to) ||
        ant[static_cast<std::size_t>(e.to)].contains(e.from)) {
      return false;
    }
  }
  return true;
}

// Component id of every node in the graph without arrows.
std::vector<int> chain_components(const MixedGraph& g) {
  const auto m = g.masks();
  std::vector<int> component(static_cast<std::size_t>(g.node_count()), -1);
  int next = 0;
  for (int start = 0; start < g.node_count(); ++start) {
    if (component[static_cast<std::size_t>(start)] >= 0) continue;
    NodeSet reached = NodeSet::of(start);
    NodeSet frontier = reached;
    while (!frontier.empty()) {
      NodeSet step;
      for (int v : frontier) {
        step |= m.lines[static_cast<std::size_t>(v)] | m.arcs[static_cast<std::size_t>(v)];
      }
      frontier = step - reached;
      reached |= step;
    }
    for (int v : reached) component[static_cast<std::size_t>(v)] = next;
    ++next;
  }
  return component;
}

}  // namespace

bool is_chain_mixed_graph(const MixedGraph& g) { return cmg_given(g, all_anteriors(g)); }

bool is_anterial(const MixedGraph& g) { return anterial_given(g, all_anteriors(g)); }

bool is_maximal(const MixedGraph& g) {
  const NodeSet all = g.nodes();
  for (int i = 0; i < g.node_count(); ++i) {
    for (int j = i + 1; j < g.node_count(); ++j) {
      if (g.adjacent(i, j)) continue;
      const bool some_separator = !for_each_subset(all.without(i).without(j), [&](NodeSet c) {
        return !separates(g, NodeSet::of(i), NodeSet::of(j), c);
      });
      if (!some_separator) return false;
    }
  }
  return true;
}

GraphClassReport classify(const MixedGraph& g) {
  GraphClassReport r;
  const auto ant = all_anteriors(g);
  const auto m = g.masks();

  bool has_line = false;
  bool has_arrow = false;
  bool has_arc = false;
  for (const Edge& e : g.edges()) {
    has_line |= e.kind == EdgeKind::line;
    has_arrow |= e.kind == EdgeKind::arrow;
    has_arc |= e.kind == EdgeKind::arc;
  }

  r.is_simple = is_simple_graph(g);
  r.is_CMG = cmg_given(g, ant);
  r.is_AnG = anterial_given(g, ant);
  r.is_UG = r.is_simple && !has_arrow && !has_arc;
  r.is_BG = r.is_simple && !has_arrow && !has_line;
  r.is_DAG = r.is_simple && r.is_CMG && !has_line && !has_arc;

  // Chain graphs: arrows only between chain components, and every component
  // carries a single edge type.
  const auto component = chain_components(g);
  bool arrows_between_components = true;
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::arrow &&
        component[static_cast<std::size_t>(e.from)] == component[static_cast<std::size_t>(e.to)]) {
      arrows_between_components = false;
    }
  }
  bool components_pure = true;
  {
    std::map<int, int> kinds;  // component -> bitmask of {line=1, arc=2}
    for (const Edge& e : g.edges()) {
      if (e.kind == EdgeKind::arrow) continue;
      kinds[component[static_cast<std::size_t>(e.from)]] |= e.kind == EdgeKind::line ? 1 : 2;
    }
    for (const auto& [c, k] : kinds) components_pure &= k != 3;
  }
  const bool chain = r.is_simple && r.is_AnG && arrows_between_components && components_pure;
  r.is_UCG = chain && !has_arc;
  r.is_BCG = chain && !has_line;

  bool arrowhead_on_line_node = false;
  for (int v = 0; v < g.node_count(); ++v) {
    const auto sv = static_cast<std::size_t>(v);
    if (!m.lines[sv].empty() && (!m.parents[sv].empty() || !m.arcs[sv].empty())) {
      arrowhead_on_line_node = true;
    }
  }
  r.is_regression_graph = chain && !arrowhead_on_line_node;
  r.is_AG = r.is_simple && r.is_AnG && !arrowhead_on_line_node;

  if (r.is_CMG) r.is_maximal = is_maximal(g);
  return r;
}

MixedGraph skeleton(const MixedGraph& g) {
  MixedGraph out(g.labels());
  for (int i = 0; i < g.node_count(); ++i) {
    for (int j = i + 1; j < g.node_count(); ++j) {
      if (g.adjacent(i, j)) out.add_edge(i, j, EdgeKind::line);
    }
  }
  return out;
}

}  // namespace faithgraph
