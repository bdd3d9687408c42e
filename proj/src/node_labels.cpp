#include "faithgraph/node_labels.hpp"

#include "faithgraph/errors.hpp"

namespace faithgraph {

NodeLabels::NodeLabels(std::vector<std::string> names) {
  for (auto& name : names) add(std::move(name));
}

int NodeLabels::add(std::string name) {
  if (name.empty()) throw InputError("node labels must be non-empty");
  if (index_.contains(name)) throw InputError("duplicate node label '" + name + "'");
  if (size() >= kMaxNodes) {
    throw CapExceeded("at most " + std::to_string(kMaxNodes) + " nodes are supported");
  }
  const int index = size();
  index_.emplace(name, index);
  names_.push_back(std::move(name));
  return index;
}

std::optional<int> NodeLabels::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int NodeLabels::index_of(std::string_view name) const {
  if (auto index = find(name)) return *index;
  throw InputError("unknown node '" + std::string(name) + "'");
}

NodeSet NodeLabels::set_of(std::span<const std::string> names) const {
  NodeSet set;
  for (const auto& name : names) set = set.with(index_of(name));
  return set;
}

std::vector<std::string> NodeLabels::names_of(NodeSet set) const {
  std::vector<std::string> out;
  for (int v : set) out.push_back(name(v));
  return out;
}

std::string NodeLabels::format(NodeSet set, std::string_view separator) const {
  std::string out;
  for (int v : set) {
    if (!out.empty()) out += separator;
    out += name(v);
  }
  return out;
}

bool NodeLabels::same_members(const NodeLabels& other) const {
  if (size() != other.size()) return false;
  for (const auto& name : names_) {
    if (!other.find(name)) return false;
  }
  return true;
}

}  // namespace faithgraph
