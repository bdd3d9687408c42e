#include "faithgraph/report_json.hpp"

#include "faithgraph/text_formats.hpp"

namespace faithgraph {

nlohmann::json witness_json(const Violation& v, const NodeLabels& labels) {
  nlohmann::json w = {
      {"rule", v.rule},
      {"A", labels.names_of(v.a)},
      {"B", labels.names_of(v.b)},
      {"C", labels.names_of(v.c)},
  };
  if (v.d) w["D"] = labels.names_of(*v.d);
  if (v.k) w["k"] = labels.name(*v.k);
  return w;
}

nlohmann::json report_json(const CheckReport& r, const NodeLabels& labels) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : r.violations) violations.push_back({{"witness", witness_json(v, labels)}});
  return {
      {"property", r.property},
      {"passed", r.passed()},
      {"violations", violations},
      {"count", r.count},
  };
}

nlohmann::json verdict_json(const FaithfulnessVerdict& v, const NodeLabels& labels) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const MixedGraph& g : v.witnesses) witnesses.push_back(serialize_graph(g));
  nlohmann::json failure = nullptr;
  if (v.failure) {
    failure = {
        {"property", v.failure->property},
        {"witness", v.failure->witness ? witness_json(*v.failure->witness, labels) : nlohmann::json(nullptr)},
        {"candidates_tested", v.failure->candidates_tested},
    };
  }
  return {
      {"graphical", v.graphical()},
      {"witnesses", witnesses},
      {"failure", failure},
  };
}

}  // namespace faithgraph
