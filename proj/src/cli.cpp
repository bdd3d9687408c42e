#include "faithgraph/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "faithgraph/axioms.hpp"
#include "faithgraph/errors.hpp"
#include "faithgraph/faithfulness.hpp"
#include "faithgraph/gaussian.hpp"
#include "faithgraph/independence_model.hpp"
#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/preorder.hpp"
#include "faithgraph/report_json.hpp"
#include "faithgraph/separation.hpp"
#include "faithgraph/text_formats.hpp"

namespace faithgraph::cli {

namespace {

using nlohmann::json;

struct Common {
  bool json = false;
  std::optional<int> cap;
  std::optional<int> edge_cap;
  unsigned parallel = 1;

  Limits limits() const {
    Limits l;
    if (cap) l = l.with_node_cap(*cap);
    if (edge_cap) l = l.with_edge_cap(*edge_cap);
    return l;
  }
};

struct ModelSource {
  std::string model;
  std::string model_graph;
  std::string cov;
  std::string role = "covariance";
};

MatrixRole parse_role(const std::string& role) {
  if (role == "covariance") return MatrixRole::covariance;
  if (role == "concentration") return MatrixRole::concentration;
  throw InputError("unknown role '" + role + "'; use covariance or concentration");
}

MixedGraph load_graph(const std::string& path) { return parse_graph(read_text_file(path), path); }

IndependenceModel load_model(const ModelSource& src, const Limits& limits) {
  const int given = !src.model.empty() + !src.model_graph.empty() + !src.cov.empty();
  if (given != 1) throw InputError("give exactly one of --model, --model-graph or --cov");
  if (!src.model.empty()) return parse_model(read_text_file(src.model), src.model);
  if (!src.model_graph.empty()) {
    InducedModelOptions options;
    options.limits = limits;
    return induced_model(load_graph(src.model_graph), options);
  }
  return model_from_covariance(parse_matrix(read_text_file(src.cov), src.cov), parse_role(src.role), limits);
}

void add_model_source(CLI::App* sub, ModelSource& src) {
  sub->add_option("--model", src.model, "independence model file");
  sub->add_option("--model-graph", src.model_graph, "use J(G) of this graph file as the model");
  sub->add_option("--cov", src.cov, "use J(Sigma) of this matrix file as the model");
  sub->add_option("--role", src.role, "matrix role for --cov: covariance or concentration");
}

NodeSet parse_node_list(const std::string& text, const NodeLabels& labels) {
  NodeSet out;
  std::string item;
  auto flush = [&] {
    if (!item.empty()) out = out.with(labels.index_of(item));
    item.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      item += c;
    }
  }
  flush();
  return out;
}

std::string braces(const NodeLabels& labels, NodeSet s) { return "{" + labels.format(s, ", ") + "}"; }

std::string describe(const Violation& v, const NodeLabels& labels) {
  std::string out = v.rule + " at A=" + braces(labels, v.a) + " B=" + braces(labels, v.b) + " C=" + braces(labels, v.c);
  if (v.d) out += " D=" + braces(labels, *v.d);
  if (v.k) out += " k=" + labels.name(*v.k);
  return out;
}

void print_report(std::ostream& out, const CheckReport& r, const NodeLabels& labels) {
  out << r.property << ": " << (r.passed() ? "passed" : "failed");
  if (!r.passed()) out << " (" << r.count << " violating instantiations)";
  out << "\n";
  for (const Violation& v : r.violations) out << "  " << describe(v, labels) << "\n";
}

json statements_json(const IndependenceModel& j) {
  json list = json::array();
  j.for_each_statement([&](const Statement& s) { list.push_back(format_statement(j.ground(), s.a, s.b, s.c)); });
  return {{"nodes", j.ground().names()}, {"statements", list}};
}

std::string walk_text(const MixedGraph& g, const Walk& w) {
  std::string out = g.labels().name(w.nodes[0]);
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    const Edge& e = g.edges()[static_cast<std::size_t>(w.edges[k])];
    std::string symbol(to_string(e.kind));
    if (e.kind == EdgeKind::arrow && e.from != w.nodes[k]) symbol = "<-";
    out += " " + symbol + " " + g.labels().name(w.nodes[k + 1]);
  }
  return out;
}

json classify_json(const GraphClassReport& r) {
  return {
      {"is_simple", r.is_simple}, {"is_CMG", r.is_CMG}, {"is_AnG", r.is_AnG},
      {"is_UG", r.is_UG}, {"is_BG", r.is_BG}, {"is_DAG", r.is_DAG},
      {"is_UCG", r.is_UCG}, {"is_BCG", r.is_BCG}, {"is_regression_graph", r.is_regression_graph},
      {"is_AG", r.is_AG}, {"is_maximal", r.is_maximal ? json(*r.is_maximal) : json(nullptr)},
  };
}

void print_verdict(std::ostream& out, const FaithfulnessVerdict& v, const NodeLabels& labels) {
  if (v.graphical()) {
    out << "graphical: " << v.witnesses.size() << " faithful graph" << (v.witnesses.size() == 1 ? "" : "s")
        << "\n";
    for (std::size_t w = 0; w < v.witnesses.size(); ++w) {
      out << "# witness " << w + 1 << "\n" << serialize_graph(v.witnesses[w]);
    }
    return;
  }
  out << "not graphical: " << v.failure->property << " fails";
  if (v.failure->witness) out << "\n  " << describe(*v.failure->witness, labels);
  if (v.failure->candidates_tested > 0) out << "\n  compatible preorders tested: " << v.failure->candidates_tested;
  out << "\n";
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const json& j) { out_ << j.dump(2) << "\n"; }
  int finish(const std::vector<CheckReport>& reports, const NodeLabels& labels);

  int classify_cmd();
  int separate_cmd();
  int model_cmd();
  int axioms_cmd();
  int stability_cmd();
  int markov_cmd();
  int faithful_cmd();
  int graphical_cmd();
  int gaussian_cmd();
  int alpha_cmd();

  std::ostream& out_;
  std::ostream& err_;
  Common common_;
  ModelSource source_;

  std::string graph_path_;
  std::string a_, b_, given_;
  bool witness_ = false;
  bool cross_check_ = false;
  bool direct_ = false;
  std::string property_ = "all";
  std::string preorder_path_, preorder_of_, trivial_;
  bool dag_ = false;
  std::string direction_ = "both";
  std::string mode_ = "global";
  std::string class_filter_ = "AnG";
  std::string ug_path_, eps_ = "1/10";
  bool print_model_ = false;
  bool print_matrix_ = false;
  std::string check_graph_;
  std::string marginalize_, condition_;
  bool random_split_ = false;
  std::uint64_t seed_ = 0;
};

int Runner::finish(const std::vector<CheckReport>& reports, const NodeLabels& labels) {
  bool passed = true;
  json list = json::array();
  for (const CheckReport& r : reports) {
    passed = passed && r.passed();
    if (common_.json) {
      list.push_back(report_json(r, labels));
    } else {
      print_report(out_, r, labels);
    }
  }
  if (common_.json) emit({{"passed", passed}, {"reports", list}});
  return passed ? kYes : kNo;
}

int Runner::classify_cmd() {
  const MixedGraph g = load_graph(graph_path_);
  const GraphClassReport r = classify(g);
  if (common_.json) {
    emit(classify_json(r));
  } else {
    const json j = classify_json(r);
    for (const auto& [key, value] : j.items()) out_ << key << ": " << value.dump() << "\n";
  }
  return kYes;
}

int Runner::separate_cmd() {
  const MixedGraph g = load_graph(graph_path_);
  const NodeSet a = parse_node_list(a_, g.labels());
  const NodeSet b = parse_node_list(b_, g.labels());
  const NodeSet c = parse_node_list(given_, g.labels());
  const bool sep = separates(g, a, b, c);
  std::optional<Walk> walk;
  if (witness_ && !sep) walk = connecting_walk_oracle(g, a, b, c, 4 * g.node_count());
  if (common_.json) {
    emit({{"separated", sep},
          {"A", g.labels().names_of(a)},
          {"B", g.labels().names_of(b)},
          {"C", g.labels().names_of(c)},
          {"walk", walk ? json(walk_text(g, *walk)) : json(nullptr)}});
  } else {
    out_ << (sep ? "separated: " : "not separated: ") << format_statement(g.labels(), a, b, c) << "\n";
    if (walk) out_ << "connecting walk: " << walk_text(g, *walk) << "\n";
  }
  return sep ? kYes : kNo;
}

int Runner::model_cmd() {
  InducedModelOptions options;
  options.limits = common_.limits();
  options.cross_check = cross_check_;
  options.via_elementary = !direct_;
  const IndependenceModel j = induced_model(load_graph(graph_path_), options);
  if (common_.json) {
    emit(statements_json(j));
  } else {
    out_ << serialize_model(j);
  }
  return kYes;
}

int Runner::axioms_cmd() {
  const Limits limits = common_.limits();
  const IndependenceModel j = load_model(source_, limits);
  CheckOptions o;
  o.limits = limits;
  using Check = std::function<CheckReport()>;
  const std::vector<std::pair<std::string, Check>> all = {
      {"semi-graphoid", [&] { return check_semi_graphoid(j, o); }},
      {"intersection", [&] { return check_intersection(j, o); }},
      {"composition", [&] { return check_composition(j, o); }},
      {"singleton-transitivity", [&] { return check_singleton_transitivity(j, o); }},
      {"upward-stability", [&] { return check_upward_stability(j, o); }},
      {"downward-stability", [&] { return check_downward_stability(j, o); }},
  };
  std::vector<CheckReport> reports;
  for (const auto& [name, check] : all) {
    const bool core = name != "upward-stability" && name != "downward-stability";
    if ((property_ == "all" && core) || property_ == name) reports.push_back(check());
  }
  if (reports.empty()) throw InputError("unknown property '" + property_ + "'");
  return finish(reports, j.ground());
}

int Runner::stability_cmd() {
  const Limits limits = common_.limits();
  const IndependenceModel j = load_model(source_, limits);
  const int sources = !preorder_path_.empty() + !preorder_of_.empty() + !trivial_.empty();
  if (sources != 1) throw InputError("give exactly one of --preorder, --preorder-of or --trivial");
  Preorder p;
  if (!preorder_path_.empty()) {
    p = parse_preorder(read_text_file(preorder_path_), j.ground(), preorder_path_);
  } else if (!preorder_of_.empty()) {
    p = minimal_preorder(align_to(load_graph(preorder_of_), j.ground()));
  } else if (trivial_ == "equivalent") {
    p = Preorder::all_equivalent(j.ground_size());
  } else if (trivial_ == "incomparable") {
    p = Preorder::all_incomparable(j.ground_size());
  } else {
    throw InputError("unknown --trivial value '" + trivial_ + "'; use equivalent or incomparable");
  }
  if (direction_ != "up" && direction_ != "down" && direction_ != "both") {
    throw InputError("unknown --direction '" + direction_ + "'; use up, down or both");
  }
  CheckOptions o;
  o.limits = limits;
  std::vector<CheckReport> reports;
  if (dag_) {
    StabilityReports both = check_dag_ordered_stabilities(j, p, o);
    if (direction_ != "down") reports.push_back(std::move(both.upward));
    if (direction_ != "up") reports.push_back(std::move(both.downward));
  } else {
    if (direction_ != "down") reports.push_back(check_ordered_upward_stability(j, p, o));
    if (direction_ != "up") reports.push_back(check_ordered_downward_stability(j, p, o));
  }
  return finish(reports, j.ground());
}

int Runner::markov_cmd() {
  const Limits limits = common_.limits();
  const IndependenceModel j = load_model(source_, limits);
  const MixedGraph g = load_graph(graph_path_);
  bool yes = false;
  if (mode_ == "global") {
    yes = is_markov(j, g, limits);
  } else if (mode_ == "pairwise") {
    yes = is_pairwise_markov(j, g, limits);
  } else if (mode_ == "minimal") {
    yes = is_minimally_markov(j, g, limits);
  } else {
    throw InputError("unknown --mode '" + mode_ + "'; use global, pairwise or minimal");
  }
  if (common_.json) {
    emit({{"mode", mode_}, {"markov", yes}});
  } else {
    out_ << (mode_ == "global" ? "" : mode_ + " ") << (yes ? "markov" : "not markov") << "\n";
  }
  return yes ? kYes : kNo;
}

int Runner::faithful_cmd() {
  const Limits limits = common_.limits();
  const IndependenceModel j = load_model(source_, limits);
  const bool yes = is_faithful(j, load_graph(graph_path_), limits);
  if (common_.json) {
    emit({{"faithful", yes}});
  } else {
    out_ << (yes ? "faithful" : "not faithful") << "\n";
  }
  return yes ? kYes : kNo;
}

int Runner::graphical_cmd() {
  DecideOptions options;
  options.limits = common_.limits();
  options.workers = common_.parallel;
  const IndependenceModel j = load_model(source_, options.limits);
  GraphClass target;
  if (class_filter_ == "UG") {
    target = GraphClass::UG;
  } else if (class_filter_ == "BG") {
    target = GraphClass::BG;
  } else if (class_filter_ == "DAG") {
    target = GraphClass::DAG;
  } else if (class_filter_ == "AnG") {
    target = GraphClass::AnG;
  } else {
    throw InputError("unknown --class-filter '" + class_filter_ + "'; use UG, BG, DAG or AnG");
  }
  const FaithfulnessVerdict v = restricted_graphical(j, target, options);
  if (common_.json) {
    json out = verdict_json(v, j.ground());
    out["class"] = class_filter_;
    emit(out);
  } else {
    print_verdict(out_, v, j.ground());
  }
  return v.graphical() ? kYes : kNo;
}

int Runner::gaussian_cmd() {
  const Limits limits = common_.limits();
  if (source_.cov.empty() == ug_path_.empty()) throw InputError("give exactly one of --cov or --ug");
  const RationalMatrix m = !source_.cov.empty()
                               ? parse_matrix(read_text_file(source_.cov), source_.cov)
                               : build_A_G_eps(load_graph(ug_path_), parse_rational(eps_));
  const MatrixRole role = parse_role(source_.role);
  const IndependenceModel j = model_from_covariance(m, role, limits);
  const RationalMatrix concentration = role == MatrixRole::concentration ? m : inverse(m);
  const bool m_matrix = is_m_matrix(concentration);
  std::optional<bool> faithful;
  if (!check_graph_.empty()) faithful = is_faithful(j, load_graph(check_graph_), limits);

  if (common_.json) {
    json out = {{"role", std::string(to_string(role))},
                {"positive_definite", true},
                {"concentration_is_m_matrix", m_matrix}};
    if (print_matrix_) out["matrix"] = serialize_matrix(m);
    if (print_model_) out["model"] = statements_json(j);
    out["faithful"] = faithful ? json(*faithful) : json(nullptr);
    emit(out);
  } else {
    out_ << "role: " << to_string(role) << "\npositive definite: yes\nconcentration matrix is an M-matrix: "
         << (m_matrix ? "yes" : "no") << "\n";
    if (print_matrix_) out_ << serialize_matrix(m);
    if (print_model_) out_ << serialize_model(j);
    if (faithful) out_ << (*faithful ? "faithful" : "not faithful") << " to " << check_graph_ << "\n";
  }
  return faithful && !*faithful ? kNo : kYes;
}

int Runner::alpha_cmd() {
  const Limits limits = common_.limits();
  const IndependenceModel j = load_model(source_, limits);
  NodeSet m;
  NodeSet c;
  if (random_split_) {
    if (!marginalize_.empty() || !condition_.empty()) {
      throw InputError("--random-split cannot be combined with --marginalize or --condition");
    }
    std::mt19937_64 rng(seed_);
    std::uniform_int_distribution<int> part(0, 2);
    for (int v : j.ground().all()) {
      const int which = part(rng);
      if (which == 1) m = m.with(v);
      if (which == 2) c = c.with(v);
    }
  } else {
    m = parse_node_list(marginalize_, j.ground());
    c = parse_node_list(condition_, j.ground());
  }
  const IndependenceModel out = alpha(j, m, c);
  if (common_.json) {
    json doc = statements_json(out);
    doc["marginalized"] = j.ground().names_of(m);
    doc["conditioned"] = j.ground().names_of(c);
    emit(doc);
  } else {
    out_ << "# marginalized: " << j.ground().format(m, " ") << "\n# conditioned: " << j.ground().format(c, " ")
         << "\n"
         << serialize_model(out);
  }
  return kYes;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Independence models, mixed graphs and faithfulness"};
  app.name("faithgraph");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", common_.json, "machine-readable output");
  app.add_option("--cap", common_.cap, "node cap for exhaustive work (clamped to hard limits)");
  app.add_option("--edge-cap", common_.edge_cap, "skeleton edge cap for the preorder search");
  app.add_option("--parallel", common_.parallel, "worker threads for the preorder search");

  std::function<int()> action;
  auto verb = [&](const char* name, const char* help, int (Runner::*fn)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&, fn] { action = [this, fn] { return (this->*fn)(); }; });
    return sub;
  };

  CLI::App* s = verb("classify", "report graph-class flags", &Runner::classify_cmd);
  s->add_option("--graph", graph_path_, "graph file")->required();

  s = verb("separate", "test A _||_ B | C in a graph", &Runner::separate_cmd);
  s->add_option("--graph", graph_path_, "graph file")->required();
  s->add_option("--a", a_, "node list")->required();
  s->add_option("--b", b_, "node list")->required();
  s->add_option("--given", given_, "conditioning node list");
  s->add_flag("--witness", witness_, "print a connecting walk when not separated");

  s = verb("model", "print J(G)", &Runner::model_cmd);
  s->add_option("--graph", graph_path_, "graph file")->required();
  s->add_flag("--cross-check", cross_check_, "recompute every statement by separation");
  s->add_flag("--direct", direct_, "one separation query per statement");

  s = verb("axioms", "check the graphoid axioms and singleton-transitivity", &Runner::axioms_cmd);
  add_model_source(s, source_);
  s->add_option("--property", property_,
                "all, semi-graphoid, intersection, composition, singleton-transitivity, "
                "upward-stability or downward-stability");

  s = verb("stability", "check ordered upward and downward stability", &Runner::stability_cmd);
  add_model_source(s, source_);
  s->add_option("--preorder", preorder_path_, "preorder file");
  s->add_option("--preorder-of", preorder_of_, "use the minimal preorder of this graph file");
  s->add_option("--trivial", trivial_, "equivalent or incomparable");
  s->add_flag("--dag", dag_, "require a partial order");
  s->add_option("--direction", direction_, "up, down or both");

  s = verb("markov", "test whether the model is Markov to a graph", &Runner::markov_cmd);
  add_model_source(s, source_);
  s->add_option("--graph", graph_path_, "graph file")->required();
  s->add_option("--mode", mode_, "global, pairwise or minimal");

  s = verb("faithful", "test J = J(G)", &Runner::faithful_cmd);
  add_model_source(s, source_);
  s->add_option("--graph", graph_path_, "graph file")->required();

  s = verb("graphical", "decide whether a faithful graph exists", &Runner::graphical_cmd);
  add_model_source(s, source_);
  s->add_option("--class-filter", class_filter_, "UG, BG, DAG or AnG");

  s = verb("gaussian", "independence model of an exact Gaussian", &Runner::gaussian_cmd);
  s->add_option("--cov", source_.cov, "matrix file");
  s->add_option("--ug", ug_path_, "undirected graph file for A^{G,eps}");
  s->add_option("--eps", eps_, "epsilon for --ug");
  s->add_option("--role", source_.role, "covariance or concentration");
  s->add_flag("--print-model", print_model_, "print the independence model");
  s->add_flag("--print-matrix", print_matrix_, "print the input matrix");
  s->add_option("--check-graph", check_graph_, "also test faithfulness to this graph file");

  s = verb("alpha", "marginalize and condition a model", &Runner::alpha_cmd);
  add_model_source(s, source_);
  s->add_option("--marginalize", marginalize_, "node list M");
  s->add_option("--condition", condition_, "node list C");
  s->add_flag("--random-split", random_split_, "draw M and C at random");
  s->add_option("--seed", seed_, "seed for --random-split");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kYes : kUsage;
  }
  try {
    return action();
  } catch (const InternalError& e) {
    err_ << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err_ << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace faithgraph::cli
