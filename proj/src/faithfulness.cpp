#include "faithgraph/faithfulness.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "faithgraph/errors.hpp"

namespace faithgraph {

namespace {

MixedGraph aligned(const MixedGraph& g, const IndependenceModel& j) {
  if (!g.labels().same_members(j.ground())) {
    throw InputError("graph nodes {" + g.labels().format(g.nodes(), ", ") +
                     "} differ from the model ground {" + j.ground().format(j.ground().all(), ", ") +
                     "}");
  }
  return align_to(g, j.ground());
}

bool same_adjacencies(const MixedGraph& a, const MixedGraph& b) {
  for (int u = 0; u < a.node_count(); ++u) {
    if (a.neighbours(u) != b.neighbours(u)) return false;
  }
  return true;
}

IndependenceModel model_of(const MixedGraph& g, const Limits& limits) {
  InducedModelOptions options;
  options.limits = limits;
  return induced_model(g, options);
}

std::optional<FaithfulnessFailure> first_failure(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) {
    if (r.passed()) continue;
    FaithfulnessFailure f;
    f.property = r.property;
    if (!r.violations.empty()) f.witness = r.violations.front();
    return f;
  }
  return std::nullopt;
}

CheckOptions quick(const Limits& limits) {
  CheckOptions o;
  o.limits = limits;
  o.stop_at_first = true;
  return o;
}

struct Candidate {
  std::uint64_t assignment = 0;
  std::optional<Preorder> preorder;  // set when both stabilities hold and the graph is maximal
  std::optional<Violation> violation;
};

// Examines assignments[begin, end) in order.
std::vector<Candidate> scan(const IndependenceModel& j, const SkeletonDirectings& directings,
                            const std::vector<std::uint64_t>& assignments, std::size_t begin,
                            std::size_t end, const CheckOptions& options) {
  std::vector<Candidate> out;
  for (std::size_t n = begin; n < end; ++n) {
    auto p = directings.minimal_preorder(assignments[n]);
    if (!p) continue;
    Candidate c;
    c.assignment = assignments[n];
    CheckReport up = check_ordered_upward_stability(j, *p, options);
    CheckReport down = up.passed() ? check_ordered_downward_stability(j, *p, options) : CheckReport{};
    if (up.passed() && down.passed()) {
      if (is_maximal(directings.graph(assignments[n]))) c.preorder = std::move(p);
    } else {
      const CheckReport& failed = up.passed() ? down : up;
      if (!failed.violations.empty()) c.violation = failed.violations.front();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Candidate> scan_parallel(const IndependenceModel& j, const SkeletonDirectings& directings,
                                     const std::vector<std::uint64_t>& assignments,
                                     const CheckOptions& options, unsigned workers) {
  const std::size_t total = assignments.size();
  if (workers <= 1 || total < 2 * static_cast<std::size_t>(workers)) {
    return scan(j, directings, assignments, 0, total, options);
  }
  std::vector<std::vector<Candidate>> blocks(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(total, w * step);
    const std::size_t end = std::min(total, begin + step);
    threads.emplace_back([&, w, begin, end] {
      try {
        blocks[w] = scan(j, directings, assignments, begin, end, options);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Candidate> out;
  for (auto& block : blocks) {
    for (Candidate& c : block) out.push_back(std::move(c));
  }
  return out;
}

FaithfulnessVerdict search(const IndependenceModel& j, const SkeletonDirectings& directings,
                           const std::vector<std::uint64_t>& assignments, const DecideOptions& options) {
  const std::vector<Candidate> candidates =
      scan_parallel(j, directings, assignments, quick(options.limits), options.workers);
  FaithfulnessVerdict verdict;
  for (const Candidate& c : candidates) {
    if (!c.preorder) continue;
    if (std::find(verdict.preorders.begin(), verdict.preorders.end(), *c.preorder) !=
        verdict.preorders.end()) {
      continue;
    }
    MixedGraph g = directings.graph(c.assignment);
    if (options.verify && !is_faithful(j, g, options.limits)) {
      throw InternalError("graph built from a compatible preorder with both stabilities is not "
                          "faithful to the model");
    }
    verdict.witnesses.push_back(std::move(g));
    verdict.preorders.push_back(*c.preorder);
  }
  if (verdict.witnesses.empty()) {
    FaithfulnessFailure f;
    f.property = "ordered-stability";
    f.candidates_tested = candidates.size();
    if (!candidates.empty()) f.witness = candidates.front().violation;
    verdict.failure = std::move(f);
  }
  return verdict;
}

std::vector<CheckReport> compositional_graphoid_reports(const IndependenceModel& j,
                                                        const CheckOptions& o) {
  std::vector<CheckReport> reports;
  reports.push_back(check_semi_graphoid(j, o));
  if (!reports.back().passed()) return reports;
  reports.push_back(check_intersection(j, o));
  if (!reports.back().passed()) return reports;
  reports.push_back(check_composition(j, o));
  if (!reports.back().passed()) return reports;
  reports.push_back(check_singleton_transitivity(j, o));
  return reports;
}

}  // namespace

MixedGraph model_skeleton(const IndependenceModel& j, const Limits& limits) {
  require_within(j.ground_size(), limits.model_nodes, Limits::kModelNodesHard, "skeleton node count");
  MixedGraph sk(j.ground());
  const NodeSet all = j.ground().all();
  for (int u : all) {
    for (int v : all) {
      if (v <= u) continue;
      const bool separable = !for_each_subset(all.without(u).without(v), [&](NodeSet c) { return !j.holds(u, v, c); });
      if (!separable) sk.add_edge(u, v, EdgeKind::line);
    }
  }
  return sk;
}

NodeSet pairwise_conditioning_set(const MixedGraph& g, int i, int j) {
  if (g.adjacent(i, j)) {
    throw InputError("'" + g.labels().name(i) + "' and '" + g.labels().name(j) +
                     "' are adjacent; the pairwise conditioning set is defined for non-adjacent pairs");
  }
  return (anteriors(g, i) | anteriors(g, j)).without(i).without(j);
}

bool is_pairwise_markov(const IndependenceModel& j, const MixedGraph& g, const Limits& limits) {
  require_within(j.ground_size(), limits.model_nodes, Limits::kModelNodesHard, "pairwise Markov node count");
  const MixedGraph h = aligned(g, j);
  for (int u = 0; u < h.node_count(); ++u) {
    for (int v = u + 1; v < h.node_count(); ++v) {
      if (h.adjacent(u, v)) continue;
      if (!j.holds(u, v, pairwise_conditioning_set(h, u, v))) return false;
    }
  }
  return true;
}

bool is_markov(const IndependenceModel& j, const MixedGraph& g, const Limits& limits) {
  return model_of(aligned(g, j), limits).subset_of(j);
}

bool is_minimally_markov(const IndependenceModel& j, const MixedGraph& g, const Limits& limits) {
  const MixedGraph h = aligned(g, j);
  return is_markov(j, h, limits) && same_adjacencies(h, model_skeleton(j, limits));
}

bool is_faithful(const IndependenceModel& j, const MixedGraph& g, const Limits& limits) {
  return model_of(aligned(g, j), limits) == j;
}

FaithfulnessVerdict decide_graphical(const IndependenceModel& j, const DecideOptions& options) {
  FaithfulnessVerdict verdict;
  verdict.failure = first_failure(compositional_graphoid_reports(j, quick(options.limits)));
  if (verdict.failure) return verdict;

  const SkeletonDirectings directings(model_skeleton(j, options.limits));
  require_within(static_cast<int>(directings.edge_count()), options.limits.skeleton_edges,
                 Limits::kSkeletonEdgesHard, "skeleton edge count for preorder search");
  std::vector<std::uint64_t> assignments(directings.count());
  for (std::uint64_t k = 0; k < assignments.size(); ++k) assignments[k] = k;
  return search(j, directings, assignments, options);
}

std::string_view to_string(GraphClass c) noexcept {
  switch (c) {
    case GraphClass::UG: return "UG";
    case GraphClass::BG: return "BG";
    case GraphClass::DAG: return "DAG";
    case GraphClass::AnG: return "AnG";
  }
  return "AnG";
}

MixedGraph pairwise_undirected_graph(const IndependenceModel& j) {
  MixedGraph g(j.ground());
  const NodeSet all = j.ground().all();
  for (int u : all) {
    for (int v : all) {
      if (v > u && !j.holds(u, v, all.without(u).without(v))) g.add_edge(u, v, EdgeKind::line);
    }
  }
  return g;
}

MixedGraph pairwise_bidirected_graph(const IndependenceModel& j) {
  MixedGraph g(j.ground());
  const NodeSet all = j.ground().all();
  for (int u : all) {
    for (int v : all) {
      if (v > u && !j.holds(u, v, NodeSet{})) g.add_edge(u, v, EdgeKind::arc);
    }
  }
  return g;
}

FaithfulnessVerdict restricted_graphical(const IndependenceModel& j, GraphClass target,
                                         const DecideOptions& options) {
  if (target == GraphClass::AnG) return decide_graphical(j, options);
  const CheckOptions o = quick(options.limits);
  FaithfulnessVerdict verdict;

  if (target == GraphClass::DAG) {
    verdict.failure = first_failure(compositional_graphoid_reports(j, o));
    if (verdict.failure) return verdict;
    const SkeletonDirectings directings(model_skeleton(j, options.limits));
    require_within(static_cast<int>(directings.edge_count()), options.limits.skeleton_edges,
                   Limits::kSkeletonEdgesHard, "skeleton edge count for preorder search");
    std::vector<std::uint64_t> assignments;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << directings.edge_count()); ++bits) {
      assignments.push_back(directings.arrows_only(bits));
    }
    std::sort(assignments.begin(), assignments.end());
    return search(j, directings, assignments, options);
  }

  std::vector<CheckReport> reports;
  reports.push_back(check_semi_graphoid(j, o));
  if (target == GraphClass::UG) {
    reports.push_back(check_intersection(j, o));
    reports.push_back(check_singleton_transitivity(j, o));
    reports.push_back(check_upward_stability(j, o));
  } else {
    reports.push_back(check_composition(j, o));
    reports.push_back(check_singleton_transitivity(j, o));
    reports.push_back(check_downward_stability(j, o));
  }
  verdict.failure = first_failure(reports);
  if (verdict.failure) return verdict;

  MixedGraph g = target == GraphClass::UG ? pairwise_undirected_graph(j) : pairwise_bidirected_graph(j);
  if (!same_adjacencies(g, model_skeleton(j, options.limits))) {
    throw InternalError("pairwise graph differs from the skeleton of a stable model");
  }
  if (options.verify && !is_faithful(j, g, options.limits)) {
    throw InternalError(std::string("model passes the ") + std::string(to_string(target)) +
                        " conditions but is not faithful to its pairwise graph");
  }
  verdict.preorders.push_back(minimal_preorder(g));
  verdict.witnesses.push_back(std::move(g));
  return verdict;
}

}  // namespace faithgraph
