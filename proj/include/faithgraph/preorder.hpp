#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "faithgraph/independence_model.hpp"
#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/node_set.hpp"

namespace faithgraph {

/// Reflexive, transitive relation over node indices 0..n-1.
class Preorder {
 public:
  Preorder() = default;

  /// `up[a]` lists every b with a ≼ b. Throws InputError with a witness pair
  /// when the relation is not reflexive or not transitive.
  static Preorder from_relation(std::vector<NodeSet> up);
  static Preorder all_equivalent(int n);
  static Preorder all_incomparable(int n);
  /// Equivalence classes (a partition of 0..n-1) plus strict relations
  /// between them, given as (lower class, upper class) index pairs. The
  /// transitive closure is taken; a cycle among classes is an InputError.
  static Preorder from_classes(int n, const std::vector<NodeSet>& classes,
                               const std::vector<std::pair<int, int>>& class_less);

  int size() const noexcept { return static_cast<int>(up_.size()); }
  /// a ≼ b
  bool leq(int a, int b) const noexcept { return up_[static_cast<std::size_t>(a)].contains(b); }
  bool equivalent(int a, int b) const noexcept { return leq(a, b) && leq(b, a); }
  /// a < b: a ≼ b and not b ≼ a.
  bool less(int a, int b) const noexcept { return leq(a, b) && !leq(b, a); }
  bool incomparable(int a, int b) const noexcept { return !leq(a, b) && !leq(b, a); }
  bool comparable(int a, int b) const noexcept { return !incomparable(a, b); }

  NodeSet up_set(int a) const noexcept { return up_[static_cast<std::size_t>(a)]; }
  NodeSet class_of(int a) const noexcept;
  /// No two distinct elements are equivalent.
  bool is_partial_order() const noexcept;

  const std::vector<NodeSet>& relation() const noexcept { return up_; }
  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  explicit Preorder(std::vector<NodeSet> up) : up_(std::move(up)) {}
  std::vector<NodeSet> up_;
};

/// Equivalence classes and the partial order they inherit.
struct QuotientOrder {
  /// Ordered by smallest member.
  std::vector<NodeSet> classes;
  /// leq[x][y]: class x ≤ class y.
  std::vector<std::vector<bool>> leq;

  bool less(std::size_t x, std::size_t y) const { return x != y && leq[x][y]; }
};

/// Throws InternalError if the inherited relation is not a partial order.
QuotientOrder quotient(const Preorder& p);

/// Lines join equivalent nodes, arrows i -> j need j < i, arcs need
/// incomparable endpoints. Throws InputError on a size mismatch.
bool is_valid_for(const Preorder& p, const MixedGraph& g);

/// The preorder with j ≼ i exactly when i = j or i ∈ ant(j). Throws
/// InputError naming the offending arrow or arc if `g` is not anterial.
Preorder minimal_preorder(const MixedGraph& g);

/// Directs every line of `sk` by `p`: equivalent endpoints give a line,
/// j < i gives i -> j, incomparable endpoints give an arc.
MixedGraph direct_skeleton(const MixedGraph& sk, const Preorder& p);

/// p is the minimal preorder of direct_skeleton(sk(J), p).
bool is_compatible(const Preorder& p, const IndependenceModel& model);

/// Assignments of {line, forward arrow, backward arrow, arc} to the edges
/// of a simple undirected skeleton. Assignment k writes edge 0 as the most
/// significant base-4 digit, so increasing k is lexicographic order.
class SkeletonDirectings {
 public:
  enum Direction : std::uint8_t { kLine = 0, kForward = 1, kBackward = 2, kArc = 3 };

  explicit SkeletonDirectings(const MixedGraph& skeleton);

  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::uint64_t count() const noexcept;
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  MixedGraph graph(std::uint64_t assignment) const;
  /// The minimal preorder of graph(assignment), or nullopt when that graph
  /// is not anterial. Works on bitmasks; no graph is built.
  std::optional<Preorder> minimal_preorder(std::uint64_t assignment) const;
  /// Assignment index using only arrows: bit e of `orientation` selects
  /// kBackward for edge e, otherwise kForward.
  std::uint64_t arrows_only(std::uint64_t orientation) const noexcept;

 private:
  Direction digit(std::uint64_t assignment, std::size_t edge) const noexcept;

  NodeLabels labels_;
  std::vector<std::pair<int, int>> edges_;
};

struct EnumerationOptions {
  Limits limits{};
};

/// Minimal preorders of every anterial directing of sk(J), deduplicated, in
/// lexicographic assignment order. Throws CapExceeded above the edge cap.
void for_each_compatible_preorder(const IndependenceModel& model,
                                  const std::function<void(const Preorder&)>& sink,
                                  const EnumerationOptions& options = {});
std::vector<Preorder> enumerate_compatible_preorders(const IndependenceModel& model,
                                                     const EnumerationOptions& options = {});

}  // namespace faithgraph
