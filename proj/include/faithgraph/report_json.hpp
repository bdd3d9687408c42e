#pragma once

#include <json.hpp>

#include "faithgraph/axioms.hpp"
#include "faithgraph/faithfulness.hpp"
#include "faithgraph/node_labels.hpp"

namespace faithgraph {

/// {"rule": ..., "A": [...], "B": [...], "C": [...], "D": [...], "k": ...};
/// D and k only when present.
nlohmann::json witness_json(const Violation& v, const NodeLabels& labels);

/// {"property", "passed", "violations": [{"witness": {...}}], "count"}
nlohmann::json report_json(const CheckReport& r, const NodeLabels& labels);

/// {"graphical", "witnesses": [graph text], "failure": {"property", "witness"}}
/// with "failure" null when graphical.
nlohmann::json verdict_json(const FaithfulnessVerdict& v, const NodeLabels& labels);

}  // namespace faithgraph
