#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "faithgraph/node_set.hpp"

namespace faithgraph {

/// Ordered, duplicate-free list of node labels. A node's index is its
/// position in the list; every NodeSet is interpreted against one of these.
class NodeLabels {
 public:
  static constexpr int kMaxNodes = NodeSet::kCapacity;

  NodeLabels() = default;
  explicit NodeLabels(std::vector<std::string> names);

  /// Appends a label and returns its index. Throws InputError on an empty or
  /// duplicate label, or when the capacity is exhausted.
  int add(std::string name);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  NodeSet all() const noexcept { return NodeSet::first(size()); }

  std::optional<int> find(std::string_view name) const;
  /// Throws InputError naming the unknown label.
  int index_of(std::string_view name) const;
  NodeSet set_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(NodeSet set) const;
  /// Space-separated labels in index order, e.g. "a c d".
  std::string format(NodeSet set, std::string_view separator = " ") const;

  /// True when both hold the same labels, in any order.
  bool same_members(const NodeLabels& other) const;

  friend bool operator==(const NodeLabels& a, const NodeLabels& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace faithgraph
