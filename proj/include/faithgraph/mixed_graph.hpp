#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faithgraph/node_labels.hpp"
#include "faithgraph/node_set.hpp"

namespace faithgraph {

enum class EdgeKind { line, arrow, arc };
enum class EdgeMark { tail, head };

std::string_view to_string(EdgeKind kind) noexcept;

/// One edge of a mixed graph. For arrows `from -> to`; lines and arcs are
/// symmetric and the endpoint order carries no meaning.
struct Edge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::line;

  bool touches(int v) const noexcept { return from == v || to == v; }
  int other(int v) const noexcept { return v == from ? to : from; }
  /// Mark of this edge at endpoint `v`.
  EdgeMark mark_at(int v) const noexcept {
    switch (kind) {
      case EdgeKind::line: return EdgeMark::tail;
      case EdgeKind::arc: return EdgeMark::head;
      case EdgeKind::arrow: return v == to ? EdgeMark::head : EdgeMark::tail;
    }
    return EdgeMark::tail;
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled graph over the three edge kinds. Parallel edges are allowed;
/// loops are not.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(NodeLabels labels);

  int add_node(std::string label);
  /// Adds an edge between existing nodes. Throws InputError for loops.
  void add_edge(int from, int to, EdgeKind kind);
  void add_edge(std::string_view from, std::string_view to, EdgeKind kind);

  const NodeLabels& labels() const noexcept { return labels_; }
  int node_count() const noexcept { return labels_.size(); }
  NodeSet nodes() const noexcept { return labels_.all(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Indices into edges() of the edges incident to v.
  const std::vector<int>& incident(int v) const { return incident_.at(static_cast<std::size_t>(v)); }

  bool adjacent(int u, int v) const;
  NodeSet neighbours(int v) const;

  /// Lines, arrows out, arrows in and arcs at every node as bitmasks.
  struct Masks {
    std::vector<NodeSet> lines;
    std::vector<NodeSet> parents;   // u in parents[v]  <=>  u -> v
    std::vector<NodeSet> children;  // w in children[v] <=>  v -> w
    std::vector<NodeSet> arcs;
  };
  Masks masks() const;

  /// Equal node lists and equal edge multisets.
  friend bool operator==(const MixedGraph& a, const MixedGraph& b);

 private:
  NodeLabels labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

/// Returns `g` with its nodes reordered to `labels`. Throws InputError when
/// the label sets differ.
MixedGraph align_to(const MixedGraph& g, const NodeLabels& labels);

/// ant(j): nodes with an anterior walk to j (lines, and arrows pointing
/// forward). j itself is never included.
NodeSet anteriors(const MixedGraph& g, int j);
NodeSet anteriors(const MixedGraph& g, std::string_view label);
/// an(j): nodes with a directed walk to j.
NodeSet ancestors(const MixedGraph& g, int j);
NodeSet ancestors(const MixedGraph& g, std::string_view label);
/// ant(j) for every node, indexed by j.
std::vector<NodeSet> all_anteriors(const MixedGraph& g);

struct GraphClassReport {
  bool is_simple = false;
  bool is_CMG = false;
  bool is_AnG = false;
  bool is_UG = false;
  bool is_BG = false;
  bool is_DAG = false;
  bool is_UCG = false;
  bool is_BCG = false;
  bool is_regression_graph = false;
  bool is_AG = false;
  /// Only evaluated for CMGs.
  std::optional<bool> is_maximal;
};

GraphClassReport classify(const MixedGraph& g);
bool is_chain_mixed_graph(const MixedGraph& g);
bool is_anterial(const MixedGraph& g);
/// Every non-adjacent pair is separated by some conditioning set.
bool is_maximal(const MixedGraph& g);

/// Simple undirected graph with a line wherever `g` has at least one edge.
MixedGraph skeleton(const MixedGraph& g);

}  // namespace faithgraph
