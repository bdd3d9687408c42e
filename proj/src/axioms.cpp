#include "faithgraph/axioms.hpp"

#include <string>

#include "faithgraph/errors.hpp"

namespace faithgraph {

namespace {

class Recorder {
 public:
  Recorder(std::string property, const CheckOptions& options)
      : max_witnesses_(options.max_witnesses), stop_at_first_(options.stop_at_first) {
    report_.property = std::move(property);
  }

  bool stopped() const noexcept { return stop_at_first_ && report_.count > 0; }

  void fail(Violation v) {
    if (stopped()) return;
    ++report_.count;
    std::size_t same_rule = 0;
    for (const Violation& seen : report_.violations) {
      if (seen.rule == v.rule) ++same_rule;
    }
    if (same_rule < max_witnesses_) report_.violations.push_back(std::move(v));
  }

  CheckReport take() { return std::move(report_); }

 private:
  CheckReport report_;
  std::size_t max_witnesses_;
  bool stop_at_first_;
};

void require_full(const IndependenceModel& j, const CheckOptions& options, const char* what) {
  require_within(j.ground_size(), options.limits.full_axiom_nodes, Limits::kFullAxiomNodesHard, what);
}

void require_elementary(const IndependenceModel& j, const CheckOptions& options, const char* what) {
  require_within(j.ground_size(), options.limits.elementary_axiom_nodes,
                 Limits::kElementaryAxiomNodesHard, what);
}

// Calls fn(a, b, c, d) for all pairwise disjoint A, B, C, D in which only C
// may be empty.
template <typename Fn>
void for_each_quadruple(NodeSet all, const Recorder& rec, Fn&& fn) {
  for_each_nonempty_subset(all, [&](NodeSet a) {
    for_each_nonempty_subset(all - a, [&](NodeSet b) {
      for_each_subset(all - a - b, [&](NodeSet c) {
        for_each_nonempty_subset(all - a - b - c, [&](NodeSet d) { fn(a, b, c, d); });
      });
      return !rec.stopped();
    });
    return !rec.stopped();
  });
}

// Calls fn(i, j, c) for i < j and every C avoiding both.
template <typename Fn>
void for_each_pair_context(NodeSet all, const Recorder& rec, Fn&& fn) {
  for (int i : all) {
    for (int j : all) {
      if (j <= i) continue;
      for_each_subset(all.without(i).without(j), [&](NodeSet c) {
        fn(i, j, c);
        return !rec.stopped();
      });
      if (rec.stopped()) return;
    }
  }
}

void require_same_ground(const IndependenceModel& j, const Preorder& p) {
  if (p.size() != j.ground_size()) {
    throw InputError("preorder has " + std::to_string(p.size()) + " nodes, model ground has " +
                     std::to_string(j.ground_size()));
  }
}

}  // namespace

CheckReport check_semi_graphoid(const IndependenceModel& j, const CheckOptions& options) {
  require_full(j, options, "semi-graphoid check node count");
  Recorder rec("semi-graphoid", options);
  const NodeSet all = j.ground().all();

  for_each_nonempty_subset(all, [&](NodeSet a) {
    for_each_nonempty_subset(all - a, [&](NodeSet b) {
      for_each_subset(all - a - b, [&](NodeSet c) {
        if (j.holds(a, b, c) && !j.holds(b, a, c)) rec.fail({"symmetry", a, b, c, {}, {}});
      });
    });
  });

  for_each_quadruple(all, rec, [&](NodeSet a, NodeSet b, NodeSet c, NodeSet d) {
    const bool joint = j.holds(a, b | d, c);
    if (joint && !j.holds(a, b, c)) rec.fail({"decomposition", a, b, c, d, {}});
    if (joint && !j.holds(a, b, c | d)) rec.fail({"weak union", a, b, c, d, {}});
    if (!joint && j.holds(a, b, c | d) && j.holds(a, d, c)) rec.fail({"contraction", a, b, c, d, {}});
  });
  return rec.take();
}

CheckReport check_intersection(const IndependenceModel& j, const CheckOptions& options) {
  require_full(j, options, "intersection check node count");
  Recorder rec("intersection", options);
  for_each_quadruple(j.ground().all(), rec, [&](NodeSet a, NodeSet b, NodeSet c, NodeSet d) {
    if (j.holds(a, b, c | d) && j.holds(a, d, c | b) && !j.holds(a, b | d, c)) {
      rec.fail({"intersection", a, b, c, d, {}});
    }
  });
  return rec.take();
}

CheckReport check_composition(const IndependenceModel& j, const CheckOptions& options) {
  require_full(j, options, "composition check node count");
  Recorder rec("composition", options);
  for_each_quadruple(j.ground().all(), rec, [&](NodeSet a, NodeSet b, NodeSet c, NodeSet d) {
    if (j.holds(a, b, c) && j.holds(a, d, c) && !j.holds(a, b | d, c)) {
      rec.fail({"composition", a, b, c, d, {}});
    }
  });
  return rec.take();
}

CheckReport check_singleton_transitivity(const IndependenceModel& j, const CheckOptions& options) {
  require_elementary(j, options, "singleton-transitivity check node count");
  Recorder rec("singleton-transitivity", options);
  const NodeSet all = j.ground().all();
  for (int i : all) {
    for (int jj : all) {
      if (jj <= i) continue;
      for (int k : all.without(i).without(jj)) {
        for_each_subset(all.without(i).without(jj).without(k), [&](NodeSet c) {
          if (j.holds(i, jj, c) && j.holds(i, jj, c.with(k)) && !j.holds(i, k, c) && !j.holds(jj, k, c)) {
            rec.fail({"singleton-transitivity", NodeSet::of(i), NodeSet::of(jj), c, {}, k});
          }
        });
      }
    }
  }
  return rec.take();
}

CheckReport check_ordered_upward_stability(const IndependenceModel& j, const Preorder& p,
                                           const CheckOptions& options) {
  require_same_ground(j, p);
  require_elementary(j, options, "upward-stability check node count");
  Recorder rec("ordered upward-stability", options);
  const NodeSet all = j.ground().all();
  for_each_pair_context(all, rec, [&](int i, int jj, NodeSet c) {
    if (!j.holds(i, jj, c)) return;
    for (int k : all - c - NodeSet::of(i) - NodeSet::of(jj)) {
      bool eligible = p.leq(i, k) || p.leq(jj, k);
      for (int l : c) eligible = eligible || p.equivalent(l, k);
      if (eligible && !j.holds(i, jj, c.with(k))) {
        rec.fail({"ordered upward-stability", NodeSet::of(i), NodeSet::of(jj), c, {}, k});
      }
    }
  });
  return rec.take();
}

CheckReport check_ordered_downward_stability(const IndependenceModel& j, const Preorder& p,
                                             const CheckOptions& options) {
  require_same_ground(j, p);
  require_elementary(j, options, "downward-stability check node count");
  Recorder rec("ordered downward-stability", options);
  const NodeSet all = j.ground().all();
  for_each_pair_context(all, rec, [&](int i, int jj, NodeSet c) {
    if (!j.holds(i, jj, c)) return;
    for (int k : c) {
      bool eligible = !p.leq(i, k) && !p.leq(jj, k);
      for (int l : c.without(k)) eligible = eligible && !p.less(l, k);
      if (eligible && !j.holds(i, jj, c.without(k))) {
        rec.fail({"ordered downward-stability", NodeSet::of(i), NodeSet::of(jj), c, {}, k});
      }
    }
  });
  return rec.take();
}

CheckReport check_upward_stability(const IndependenceModel& j, const CheckOptions& options) {
  CheckReport r = check_ordered_upward_stability(j, Preorder::all_equivalent(j.ground_size()), options);
  r.property = "upward-stability";
  for (Violation& v : r.violations) v.rule = r.property;
  return r;
}

CheckReport check_downward_stability(const IndependenceModel& j, const CheckOptions& options) {
  CheckReport r =
      check_ordered_downward_stability(j, Preorder::all_incomparable(j.ground_size()), options);
  r.property = "downward-stability";
  for (Violation& v : r.violations) v.rule = r.property;
  return r;
}

StabilityReports check_dag_ordered_stabilities(const IndependenceModel& j, const Preorder& order,
                                               const CheckOptions& options) {
  require_same_ground(j, order);
  if (!order.is_partial_order()) {
    for (int a = 0; a < order.size(); ++a) {
      const NodeSet cls = order.class_of(a);
      if (cls.size() > 1) {
        throw InputError("order is not a partial order: '" + j.ground().name(cls.lowest()) +
                         "' and '" + j.ground().name(cls.without(cls.lowest()).lowest()) +
                         "' are equivalent");
      }
    }
  }
  return {check_ordered_upward_stability(j, order, options),
          check_ordered_downward_stability(j, order, options)};
}

}  // namespace faithgraph
