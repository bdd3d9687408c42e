#pragma once

#include <string>
#include <string_view>

#include "faithgraph/gaussian.hpp"
#include "faithgraph/independence_model.hpp"
#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/node_labels.hpp"
#include "faithgraph/preorder.hpp"

namespace faithgraph {

/// Reads a whole file. Throws InputError if it cannot be opened.
std::string read_text_file(const std::string& path);

struct GraphParseOptions {
  /// Reject a line together with an arrow, or two opposed arrows, between
  /// the same pair.
  bool chain_multi_edges_only = true;
};

/// Graph text: `node A`, `A -- B`, `A -> B`, `A <-> B`, one per line, `#`
/// starts a comment. Edge endpoints are declared on first use; a repeated
/// `node` line is an error; a repeated edge line adds a parallel edge.
/// Errors are ParseError with `source` as the file name.
MixedGraph parse_graph(std::string_view text, const std::string& source = "<graph>",
                       const GraphParseOptions& options = {});
/// `node` lines in index order, then one line per edge in insertion order.
std::string serialize_graph(const MixedGraph& g);

/// Independence statements, one per line: `a,b _||_ c,d | e f`. Sets may be
/// separated by commas or spaces; the `|` part is optional. `nodes a b c`
/// lines declare ground nodes in order; nodes first seen in a statement are
/// appended. Statements are symmetrized and nothing else is added.
IndependenceModel parse_model(std::string_view text, const std::string& source = "<model>");
/// `nodes` line, then each statement once in for_each_statement order.
std::string serialize_model(const IndependenceModel& j);
/// `a,b _||_ c | d e`
std::string format_statement(const NodeLabels& labels, NodeSet a, NodeSet b, NodeSet c);

/// CSV with a header row of labels. If the header starts with an empty cell,
/// every row starts with its label, which must follow the header order.
/// Entries are integers, `p/q` or decimals. `#` lines are skipped.
RationalMatrix parse_matrix(std::string_view text, const std::string& source = "<matrix>");
std::string serialize_matrix(const RationalMatrix& m);

/// `class a b c` declares an equivalence class; `order X < Y < Z` puts
/// class X below class Y, and so on. X names a node of the class (tried
/// first) or a 0-based index into the `class` lines. Nodes in no class form
/// singleton classes; pairs left unrelated are incomparable.
Preorder parse_preorder(std::string_view text, const NodeLabels& labels,
                        const std::string& source = "<preorder>");
/// A `class` line per class, then an `order` line per covering pair, both by
/// smallest member.
std::string serialize_preorder(const Preorder& p, const NodeLabels& labels);

}  // namespace faithgraph
