#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "faithgraph/independence_model.hpp"
#include "faithgraph/node_set.hpp"
#include "faithgraph/preorder.hpp"

namespace faithgraph {

/// One failing instantiation of a rule. For the set axioms `d` is the fourth
/// set; for singleton-transitivity and the stabilities a = {i}, b = {j} and
/// `k` is the single node.
struct Violation {
  std::string rule;
  NodeSet a;
  NodeSet b;
  NodeSet c;
  std::optional<NodeSet> d;
  std::optional<int> k;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  std::string property;
  /// First witnesses in iteration order, at most CheckOptions::max_witnesses
  /// per rule.
  std::vector<Violation> violations;
  /// Total number of failing instantiations.
  std::size_t count = 0;

  bool passed() const noexcept { return count == 0; }
};

struct CheckOptions {
  Limits limits{};
  std::size_t max_witnesses = 1;
  /// Stop after the first violation; `count` is then 0 or 1.
  bool stop_at_first = false;
};

/// Symmetry, decomposition, weak union and contraction. Instantiations are
/// visited with A, B, C, D in increasing mask order.
CheckReport check_semi_graphoid(const IndependenceModel& j, const CheckOptions& options = {});
CheckReport check_intersection(const IndependenceModel& j, const CheckOptions& options = {});
CheckReport check_composition(const IndependenceModel& j, const CheckOptions& options = {});
CheckReport check_singleton_transitivity(const IndependenceModel& j,
                                         const CheckOptions& options = {});

/// Elementary statements only. `p` must be over the ground of `j`.
CheckReport check_ordered_upward_stability(const IndependenceModel& j, const Preorder& p,
                                           const CheckOptions& options = {});
CheckReport check_ordered_downward_stability(const IndependenceModel& j, const Preorder& p,
                                             const CheckOptions& options = {});

/// The ordered checks under the all-equivalent preorder.
CheckReport check_upward_stability(const IndependenceModel& j, const CheckOptions& options = {});
/// The ordered checks under the all-incomparable preorder.
CheckReport check_downward_stability(const IndependenceModel& j, const CheckOptions& options = {});

struct StabilityReports {
  CheckReport upward;
  CheckReport downward;

  bool passed() const noexcept { return upward.passed() && downward.passed(); }
};

/// Both ordered checks for a partial order. Throws InputError when `order`
/// has two equivalent nodes.
StabilityReports check_dag_ordered_stabilities(const IndependenceModel& j, const Preorder& order,
                                               const CheckOptions& options = {});

}  // namespace faithgraph
