#include "faithgraph/text_formats.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "faithgraph/errors.hpp"

namespace faithgraph {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct SourceLine {
  std::size_t number;  // 1-based
  std::string_view body;
};

// Non-blank lines with `#` comments removed.
std::vector<SourceLine> content_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    out.push_back({number, line});
  }
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Splits on whitespace and on any character in `extra`.
std::vector<Token> tokens_of(std::string_view s, std::string_view extra = {}) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i]) || extra.find(s[i]) != std::string_view::npos) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i]) && extra.find(s[i]) == std::string_view::npos) ++i;
    out.push_back({std::string(s.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

int ensure_node(MixedGraph& g, const std::string& label) {
  if (auto idx = g.labels().find(label)) return *idx;
  return g.add_node(label);
}

bool has_edge(const MixedGraph& g, int from, int to, EdgeKind kind) {
  for (int ei : g.incident(from)) {
    const Edge& e = g.edges()[static_cast<std::size_t>(ei)];
    if (e.kind == kind && e.from == from && e.to == to) return true;
  }
  return false;
}

bool has_line(const MixedGraph& g, int u, int v) {
  return has_edge(g, u, v, EdgeKind::line) || has_edge(g, v, u, EdgeKind::line);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MixedGraph parse_graph(std::string_view text, const std::string& source, const GraphParseOptions& options) {
  MixedGraph g;
  NodeSet declared;
  for (const SourceLine& line : content_lines(text)) {
    const auto toks = tokens_of(line.body);
    auto fail = [&](std::size_t column, const std::string& msg) -> ParseError {
      return ParseError(source, line.number, column, msg);
    };
    if (toks[0].text == "node") {
      if (toks.size() != 2) throw fail(toks[0].column, "expected 'node <label>'");
      if (auto idx = g.labels().find(toks[1].text)) {
        if (declared.contains(*idx)) throw fail(toks[1].column, "duplicate node " + quoted(toks[1].text));
        declared = declared.with(*idx);
        continue;
      }
      if (g.node_count() >= NodeLabels::kMaxNodes) {
        throw fail(toks[1].column, "more than " + std::to_string(NodeLabels::kMaxNodes) + " nodes");
      }
      declared = declared.with(g.add_node(toks[1].text));
      continue;
    }
    if (toks.size() != 3) throw fail(toks[0].column, "expected 'node X', 'X -- Y', 'X -> Y' or 'X <-> Y'");
    EdgeKind kind;
    if (toks[1].text == "--") {
      kind = EdgeKind::line;
    } else if (toks[1].text == "->") {
      kind = EdgeKind::arrow;
    } else if (toks[1].text == "<->") {
      kind = EdgeKind::arc;
    } else {
      throw fail(toks[1].column, "unknown edge " + quoted(toks[1].text) + "; use --, -> or <->");
    }
    if (toks[0].text == toks[2].text) throw fail(toks[2].column, "loop at " + quoted(toks[0].text));
    int from = 0;
    int to = 0;
    try {
      from = ensure_node(g, toks[0].text);
      to = ensure_node(g, toks[2].text);
    } catch (const InputError& e) {
      throw fail(toks[0].column, e.what());
    }
    if (options.chain_multi_edges_only) {
      const bool clash =
          (kind == EdgeKind::line && (has_edge(g, from, to, EdgeKind::arrow) || has_edge(g, to, from, EdgeKind::arrow))) ||
          (kind == EdgeKind::arrow && (has_line(g, from, to) || has_edge(g, to, from, EdgeKind::arrow)));
      if (clash) {
        throw fail(toks[1].column, "illegal multi-edge between " + quoted(toks[0].text) + " and " +
                                       quoted(toks[2].text) +
                                       ": a chain mixed graph may pair an arc with a line or an "
                                       "arrow, but not a line with an arrow or two opposed arrows");
      }
    }
    g.add_edge(from, to, kind);
  }
  return g;
}

std::string serialize_graph(const MixedGraph& g) {
  std::string out;
  for (const std::string& name : g.labels().names()) out += "node " + name + "\n";
  for (const Edge& e : g.edges()) {
    out += g.labels().name(e.from) + " " + std::string(to_string(e.kind)) + " " + g.labels().name(e.to) + "\n";
  }
  return out;
}

IndependenceModel parse_model(std::string_view text, const std::string& source) {
  struct Pending {
    std::vector<Token> a, b, c;
    std::size_t line;
  };
  NodeLabels labels;
  std::vector<Pending> pending;
  auto add_label = [&](const Token& t, std::size_t line) {
    if (labels.find(t.text)) return;
    try {
      labels.add(t.text);
    } catch (const Error& e) {
      throw ParseError(source, line, t.column, e.what());
    }
  };

  for (const SourceLine& line : content_lines(text)) {
    const auto first = tokens_of(line.body);
    if (first[0].text == "nodes") {
      for (std::size_t t = 1; t < first.size(); ++t) {
        if (labels.find(first[t].text)) {
          throw ParseError(source, line.number, first[t].column, "duplicate node " + quoted(first[t].text));
        }
        add_label(first[t], line.number);
      }
      continue;
    }
    const std::size_t sep = line.body.find("_||_");
    if (sep == std::string_view::npos) {
      throw ParseError(source, line.number, first[0].column, "expected 'A _||_ B | C' or 'nodes ...'");
    }
    const std::size_t bar = line.body.find('|', sep + 4);
    auto shifted = [](std::vector<Token> toks, std::size_t offset) {
      for (Token& t : toks) t.column += offset;
      return toks;
    };
    Pending p;
    p.line = line.number;
    p.a = tokens_of(line.body.substr(0, sep), ",");
    const std::string_view b_part = line.body.substr(sep + 4, bar == std::string_view::npos ? std::string_view::npos : bar - sep - 4);
    p.b = shifted(tokens_of(b_part, ","), sep + 4);
    if (bar != std::string_view::npos) p.c = shifted(tokens_of(line.body.substr(bar + 1), ","), bar + 1);
    if (p.a.empty()) throw ParseError(source, line.number, 1, "left-hand set is empty");
    if (p.b.empty()) throw ParseError(source, line.number, sep + 5, "right-hand set is empty");
    for (const auto* part : {&p.a, &p.b, &p.c}) {
      for (const Token& t : *part) {
        if (t.text.find('|') != std::string::npos || t.text.find("_||_") != std::string::npos) {
          throw ParseError(source, line.number, t.column, "unexpected " + quoted(t.text));
        }
        add_label(t, line.number);
      }
    }
    pending.push_back(std::move(p));
  }

  IndependenceModel model(labels);
  for (const Pending& p : pending) {
    NodeSet sets[3];
    NodeSet seen;
    const std::vector<Token>* parts[3] = {&p.a, &p.b, &p.c};
    for (int s = 0; s < 3; ++s) {
      for (const Token& t : *parts[s]) {
        const int v = labels.index_of(t.text);
        if (seen.contains(v)) {
          throw ParseError(source, p.line, t.column, "node " + quoted(t.text) + " appears twice in the statement");
        }
        seen = seen.with(v);
        sets[s] = sets[s].with(v);
      }
    }
    model.insert(sets[0], sets[1], sets[2]);
  }
  return model;
}

std::string format_statement(const NodeLabels& labels, NodeSet a, NodeSet b, NodeSet c) {
  std::string out = labels.format(a, ",") + " _||_ " + labels.format(b, ",");
  if (!c.empty()) out += " | " + labels.format(c, " ");
  return out;
}

std::string serialize_model(const IndependenceModel& j) {
  std::string out = "nodes";
  for (const std::string& name : j.ground().names()) out += " " + name;
  out += "\n";
  j.for_each_statement([&](const Statement& s) { out += format_statement(j.ground(), s.a, s.b, s.c) + "\n"; });
  return out;
}

RationalMatrix parse_matrix(std::string_view text, const std::string& source) {
  auto cells_of = [](std::string_view body) {
    std::vector<Token> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      std::string_view cell = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      std::size_t lead = 0;
      while (lead < cell.size() && is_space(cell[lead])) ++lead;
      cell.remove_prefix(lead);
      while (!cell.empty() && is_space(cell.back())) cell.remove_suffix(1);
      if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') cell = cell.substr(1, cell.size() - 2);
      cells.push_back({std::string(cell), start + lead + 1});
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  };

  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(source, 1, 1, "matrix file has no header row");
  auto header = cells_of(lines[0].body);
  const bool row_labels = header[0].text.empty();
  if (row_labels) header.erase(header.begin());
  NodeLabels labels;
  for (const Token& h : header) {
    if (h.text.empty()) throw ParseError(source, lines[0].number, h.column, "empty label in header");
    try {
      labels.add(h.text);
    } catch (const Error& e) {
      throw ParseError(source, lines[0].number, h.column, e.what());
    }
  }
  const int n = labels.size();
  if (static_cast<int>(lines.size()) - 1 != n) {
    throw ParseError(source, lines.back().number, 1,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }
  RationalMatrix m(labels);
  for (int r = 0; r < n; ++r) {
    const SourceLine& line = lines[static_cast<std::size_t>(r) + 1];
    auto cells = cells_of(line.body);
    if (row_labels) {
      if (cells[0].text != labels.name(r)) {
        throw ParseError(source, line.number, cells[0].column,
                         "row label " + quoted(cells[0].text) + " should be " + quoted(labels.name(r)));
      }
      cells.erase(cells.begin());
    }
    if (static_cast<int>(cells.size()) != n) {
      throw ParseError(source, line.number, 1,
                       "expected " + std::to_string(n) + " entries, found " + std::to_string(cells.size()));
    }
    for (int c = 0; c < n; ++c) {
      const Token& cell = cells[static_cast<std::size_t>(c)];
      try {
        m.at(r, c) = parse_rational(cell.text);
      } catch (const InputError& e) {
        throw ParseError(source, line.number, cell.column, e.what());
      }
    }
  }
  return m;
}

std::string serialize_matrix(const RationalMatrix& m) {
  std::string out;
  for (int c = 0; c < m.size(); ++c) out += (c ? "," : "") + m.labels().name(c);
  out += "\n";
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) out += (c ? "," : "") + format_rational(m.at(r, c));
    out += "\n";
  }
  return out;
}

Preorder parse_preorder(std::string_view text, const NodeLabels& labels, const std::string& source) {
  std::vector<NodeSet> classes;
  std::vector<std::pair<std::size_t, std::vector<Token>>> orders;
  NodeSet listed;
  for (const SourceLine& line : content_lines(text)) {
    const auto toks = tokens_of(line.body);
    if (toks[0].text == "class") {
      if (toks.size() < 2) throw ParseError(source, line.number, toks[0].column, "empty class");
      NodeSet cls;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        const auto v = labels.find(toks[t].text);
        if (!v) throw ParseError(source, line.number, toks[t].column, "unknown node " + quoted(toks[t].text));
        if (listed.contains(*v)) {
          throw ParseError(source, line.number, toks[t].column, "node " + quoted(toks[t].text) + " is in two classes");
        }
        listed = listed.with(*v);
        cls = cls.with(*v);
      }
      classes.push_back(cls);
    } else if (toks[0].text == "order") {
      std::vector<Token> chain;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        const bool want_name = (t % 2) == 1;
        if (want_name == (toks[t].text == "<")) {
          throw ParseError(source, line.number, toks[t].column, "expected 'order X < Y [< Z ...]'");
        }
        if (want_name) chain.push_back(toks[t]);
      }
      if (chain.size() < 2 || toks.size() % 2 != 0) {
        throw ParseError(source, line.number, toks[0].column, "expected 'order X < Y [< Z ...]'");
      }
      orders.emplace_back(line.number, std::move(chain));
    } else {
      throw ParseError(source, line.number, toks[0].column, "expected a 'class' or 'order' line");
    }
  }
  const std::size_t declared = classes.size();
  for (int v : labels.all() - listed) classes.push_back(NodeSet::of(v));

  auto class_index = [&](std::size_t line, const Token& t) -> int {
    if (auto v = labels.find(t.text)) {
      for (std::size_t k = 0; k < classes.size(); ++k) {
        if (classes[k].contains(*v)) return static_cast<int>(k);
      }
    }
    if (!t.text.empty() && t.text.find_first_not_of("0123456789") == std::string::npos && t.text.size() < 9) {
      const std::size_t k = std::stoul(t.text);
      if (k < declared) return static_cast<int>(k);
    }
    throw ParseError(source, line, t.column, quoted(t.text) + " is neither a node nor a class index");
  };
  std::vector<std::pair<int, int>> less;
  for (const auto& [line, chain] : orders) {
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
      const int lo = class_index(line, chain[t]);
      const int hi = class_index(line, chain[t + 1]);
      if (lo == hi) throw ParseError(source, line, chain[t + 1].column, "a class cannot be below itself");
      less.emplace_back(lo, hi);
    }
  }
  try {
    return Preorder::from_classes(labels.size(), classes, less);
  } catch (const InputError& e) {
    throw ParseError(source, orders.empty() ? 1 : orders.back().first, 1, e.what());
  }
}

std::string serialize_preorder(const Preorder& p, const NodeLabels& labels) {
  const QuotientOrder q = quotient(p);
  std::string out;
  for (NodeSet cls : q.classes) out += "class " + labels.format(cls, " ") + "\n";
  const std::size_t k = q.classes.size();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (!q.less(x, y)) continue;
      bool covering = true;
      for (std::size_t z = 0; z < k && covering; ++z) {
        if (q.less(x, z) && q.less(z, y)) covering = false;
      }
      if (covering) {
        out += "order " + labels.name(q.classes[x].lowest()) + " < " + labels.name(q.classes[y].lowest()) + "\n";
      }
    }
  }
  return out;
}

}  // namespace faithgraph
