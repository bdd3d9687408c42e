#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <type_traits>

namespace faithgraph {

/// A set of node indices packed into a 32-bit mask; index i is bit i.
class NodeSet {
 public:
  static constexpr int kCapacity = 32;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint32_t rest) noexcept : rest_(rest) {}

    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr NodeSet() noexcept = default;
  constexpr explicit NodeSet(std::uint32_t bits) noexcept : bits_(bits) {}

  static constexpr NodeSet of(int v) noexcept { return NodeSet(std::uint32_t{1} << v); }
  /// {0, 1, ..., n-1}
  static constexpr NodeSet first(int n) noexcept {
    return NodeSet(n >= kCapacity ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1u; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  /// Smallest member; undefined on the empty set.
  constexpr int lowest() const noexcept { return std::countr_zero(bits_); }

  constexpr bool subset_of(NodeSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(NodeSet other) const noexcept {
    return (bits_ & other.bits_) == 0;
  }
  constexpr NodeSet with(int v) const noexcept { return NodeSet(bits_ | (std::uint32_t{1} << v)); }
  constexpr NodeSet without(int v) const noexcept {
    return NodeSet(bits_ & ~(std::uint32_t{1} << v));
  }

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) noexcept { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) noexcept { return NodeSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) noexcept { return NodeSet(a.bits_ & ~b.bits_); }
  constexpr NodeSet& operator|=(NodeSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr NodeSet& operator&=(NodeSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr NodeSet& operator-=(NodeSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(NodeSet, NodeSet) noexcept = default;
  friend constexpr auto operator<=>(NodeSet, NodeSet) noexcept = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Calls `fn(subset)` for every subset of `set`, the empty set and `set`
/// itself included, in increasing mask order. If `fn` returns bool, a false
/// return stops the enumeration and for_each_subset returns false.
template <typename Fn>
constexpr bool for_each_subset(NodeSet set, Fn&& fn) {
  const std::uint32_t mask = set.bits();
  std::uint32_t sub = 0;
  do {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, NodeSet>, bool>) {
      if (!fn(NodeSet(sub))) return false;
    } else {
      fn(NodeSet(sub));
    }
    sub = (sub - mask) & mask;
  } while (sub != 0);
  return true;
}

/// As for_each_subset, skipping the empty set.
template <typename Fn>
constexpr bool for_each_nonempty_subset(NodeSet set, Fn&& fn) {
  return for_each_subset(set, [&](NodeSet sub) {
    if (sub.empty()) return true;
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, NodeSet>, bool>) {
      return fn(sub);
    } else {
      fn(sub);
      return true;
    }
  });
}

}  // namespace faithgraph
