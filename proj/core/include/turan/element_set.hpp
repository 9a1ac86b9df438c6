#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace turan {

inline constexpr int kMaxElements = 64;

/// A subset of a ground set {0, ..., n-1} with n <= 64, stored as one word.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(int e) { return ElementSet(std::uint64_t{1} << e); }
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static ElementSet of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int e : elements) s = s.with(e);
    return s;
  }
  template <class Range>
  static ElementSet from_range(const Range& elements) {
    ElementSet s;
    for (int e : elements) s = s.with(static_cast<int>(e));
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool includes(ElementSet other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (std::uint64_t{1} << e)); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(std::uint64_t{1} << e)); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator old = *this; ++*this; return old; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Removes element `e` and shifts every larger index down by one.
constexpr ElementSet squeeze(ElementSet s, int e) {
  const std::uint64_t low = s.bits() & ((std::uint64_t{1} << e) - 1);
  const std::uint64_t high = e >= 63 ? 0 : (s.bits() >> (e + 1)) << e;
  return ElementSet(low | high);
}

/// Relabels the members of `s` that lie in `keep` to 0..|keep|-1, preserving order.
constexpr ElementSet compress(ElementSet s, ElementSet keep) {
  std::uint64_t out = 0;
  int next = 0;
  for (int e : keep) {
    if (s.contains(e)) out |= std::uint64_t{1} << next;
    ++next;
  }
  return ElementSet(out);
}

/// Inverse of compress: maps bit i of `s` to the i-th smallest member of `keep`.
constexpr ElementSet expand(ElementSet s, ElementSet keep) {
  std::uint64_t out = 0;
  int next = 0;
  for (int e : keep) {
    if (s.contains(next)) out |= std::uint64_t{1} << e;
    ++next;
  }
  return ElementSet(out);
}

/// Next larger word with the same popcount (Gosper's hack). Undefined for 0.
constexpr std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

/// Calls f(ElementSet) for every k-subset of {0..n-1} in increasing bitmask order.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(ElementSet{});
    return;
  }
  const std::uint64_t limit_bit = n >= 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t v = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    f(ElementSet(v));
    if (k == n) return;
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    // Last combination has its k bits packed at the top.
    if ((v & top) && std::popcount(v >> (n - k)) == k) return;
    v = next_same_popcount(v);
    if (limit_bit != 0 && v >= limit_bit) return;
  }
}

/// Calls f(ElementSet) for every k-subset of `universe`, in increasing bitmask order.
template <class F>
void for_each_k_subset_of(ElementSet universe, int k, F&& f) {
  const int m = universe.size();
  for_each_k_subset(m, k, [&](ElementSet local) { f(expand(local, universe)); });
}

/// True if pred(S) holds for some k-subset S of {0..n-1}; stops at the first hit.
template <class P>
bool any_k_subset(int n, int k, P&& pred) {
  if (k < 0 || k > n) return false;
  if (k == 0) return pred(ElementSet{});
  std::uint64_t v = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t last = v << (n - k);
  while (true) {
    if (pred(ElementSet(v))) return true;
    if (v == last) return false;
    v = next_same_popcount(v);
  }
}

}  // namespace turan
