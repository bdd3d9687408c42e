#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "faithgraph/node_labels.hpp"
#include "faithgraph/node_set.hpp"

namespace faithgraph {

class MixedGraph;

/// <A, B | C> over the indices of some ground set.
struct Statement {
  NodeSet a;
  NodeSet b;
  NodeSet c;

  bool trivial() const noexcept { return a.empty() || b.empty(); }
  bool elementary() const noexcept { return a.size() == 1 && b.size() == 1; }
  friend bool operator==(const Statement&, const Statement&) = default;
};

/// Caps on exhaustive work. Each can be raised up to its hard bound.
struct Limits {
  static constexpr int kModelNodesHard = 12;
  static constexpr int kFullAxiomNodesHard = 10;
  static constexpr int kElementaryAxiomNodesHard = 12;
  static constexpr int kSkeletonEdgesHard = 14;

  int model_nodes = 10;            // full materialization of J(G), J(Sigma), alpha
  int full_axiom_nodes = 8;        // checks over (A, B, C, D) instantiations
  int elementary_axiom_nodes = 12; // singleton-transitivity, stabilities
  int skeleton_edges = 12;         // 4^edges directings in the preorder search

  /// Sets every node cap to `nodes`, clamped to the hard bounds.
  Limits with_node_cap(int nodes) const;
  Limits with_edge_cap(int edges) const;
};

/// Throws CapExceeded naming `what` when `nodes > cap`.
void require_within(int nodes, int cap, int hard_cap, const char* what);

/// Set of independence statements over a finite ground set. Statements with
/// an empty side are always members. Storage is one bit per ordered triple
/// of disjoint sets; insertion keeps the relation symmetric.
class IndependenceModel {
 public:
  static constexpr int kMaxGround = Limits::kModelNodesHard;

  IndependenceModel() : IndependenceModel(NodeLabels{}) {}
  /// Model with only the trivial statements.
  explicit IndependenceModel(NodeLabels ground);

  /// Model containing every statement.
  static IndependenceModel full(NodeLabels ground);

  const NodeLabels& ground() const noexcept { return ground_; }
  int ground_size() const noexcept { return ground_.size(); }

  /// Validated query: the sets must lie inside the ground set and be pairwise
  /// disjoint, otherwise InputError.
  bool contains(NodeSet a, NodeSet b, NodeSet c) const;
  bool contains(const Statement& s) const { return contains(s.a, s.b, s.c); }
  bool contains(std::span<const std::string> a, std::span<const std::string> b,
                std::span<const std::string> c) const;

  /// Unvalidated membership for disjoint sets inside the ground set.
  bool holds(NodeSet a, NodeSet b, NodeSet c) const noexcept {
    if (a.empty() || b.empty()) return true;
    const std::uint64_t i = index_of(a, b, c);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }
  bool holds(int i, int j, NodeSet c) const noexcept { return holds(NodeSet::of(i), NodeSet::of(j), c); }

  /// Inserts <A,B|C> and <B,A|C>. Trivial statements are ignored.
  void insert(NodeSet a, NodeSet b, NodeSet c);
  void insert(const Statement& s) { insert(s.a, s.b, s.c); }
  void erase(NodeSet a, NodeSet b, NodeSet c);
  /// insert() without validation, for disjoint non-empty sets in the ground.
  void insert_unchecked(NodeSet a, NodeSet b, NodeSet c) noexcept {
    assign_bit(index_of(a, b, c), true);
    assign_bit(index_of(b, a, c), true);
  }
  void set(NodeSet a, NodeSet b, NodeSet c, bool present);

  /// Calls fn(statement) for every non-trivial member, once per symmetric
  /// pair (the orientation with a < b by mask), ordered by (C, A, B).
  void for_each_statement(const std::function<void(const Statement&)>& fn) const;
  /// Non-trivial members counted once per symmetric pair.
  std::size_t statement_count() const;
  /// Every statement of *this is a member of `other` (same ground order).
  bool subset_of(const IndependenceModel& other) const;

  friend bool operator==(const IndependenceModel& a, const IndependenceModel& b) {
    return a.ground_ == b.ground_ && a.bits_ == b.bits_;
  }

  /// Bit index of the ordered triple: node v contributes base-4 digit
  /// 1 (in A), 2 (in B) or 3 (in C).
  static std::uint64_t index_of(NodeSet a, NodeSet b, NodeSet c) noexcept {
    return spread(a.bits()) | (spread(b.bits()) << 1) | (spread(c.bits()) * 3);
  }

 private:
  static std::uint64_t spread(std::uint32_t x) noexcept {
    std::uint64_t v = x;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v << 2)) & 0x3333333333333333ull;
    v = (v | (v << 1)) & 0x5555555555555555ull;
    return v;
  }
  void assign_bit(std::uint64_t index, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (index & 63);
    if (value) {
      bits_[index >> 6] |= mask;
    } else {
      bits_[index >> 6] &= ~mask;
    }
  }
  void validate(NodeSet a, NodeSet b, NodeSet c) const;

  NodeLabels ground_;
  std::vector<std::uint64_t> bits_;
};

/// Builds the model in which <A,B|C> holds iff <i,j|C> holds for every i in
/// A and j in B, which is how a model closed under composition and
/// decomposition is determined by its elementary part.
/// `independent_of(i, C)` returns every j (outside C and i) with <i,j|C>.
IndependenceModel model_from_elementary(
    NodeLabels ground, const std::function<NodeSet(int i, NodeSet c)>& independent_of);

struct InducedModelOptions {
  Limits limits{};
  /// Compute J(G) from elementary separations via composition; otherwise
  /// run a separation query per triple.
  bool via_elementary = true;
  /// Recompute every triple directly and throw InternalError on mismatch.
  bool cross_check = false;
};

/// J(G): every disjoint triple separated in G.
IndependenceModel induced_model(const MixedGraph& g, const InducedModelOptions& options = {});

/// J(G1) == J(G2). Node sets must agree (order may differ).
bool markov_equivalent(const MixedGraph& g1, const MixedGraph& g2, const Limits& limits = {});

/// Marginalizes over M and conditions on C: the model over ground \ (M u C)
/// with <A,B|D> iff <A,B|D u C> in J.
IndependenceModel alpha(const IndependenceModel& model, NodeSet marginalize, NodeSet condition);

/// `model` with its ground reordered to `labels`; InputError if the label
/// sets differ.
IndependenceModel align_to(const IndependenceModel& model, const NodeLabels& labels);

}  // namespace faithgraph
