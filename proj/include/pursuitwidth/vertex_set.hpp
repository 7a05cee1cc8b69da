#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <type_traits>
#include <vector>

namespace pw {

using Vertex = int;

// Set of vertices over 0..63, stored as a bitmask. Iteration is in
// ascending vertex order, which is also the canonical external order.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  // {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <class Range>
  static VertexSet from_range(const Range& r) {
    VertexSet s;
    for (Vertex v : r) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  // Smallest element; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

// "0,2,5" (empty set gives "").
inline std::string join(VertexSet s, const char* sep = ",") {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

// "{0,2,5}"
inline std::string to_string(VertexSet s) { return "{" + join(s) + "}"; }

// Calls fn(subset) for every subset of `base` with at most `max_size`
// elements, in order of increasing size and lexicographic within a size.
// fn may return bool; returning false stops the enumeration.
template <class Fn>
bool for_each_subset_up_to(VertexSet base, int max_size, Fn&& fn) {
  const std::vector<Vertex> elems = base.to_vector();
  const int m = static_cast<int>(elems.size());
  if (max_size > m) max_size = m;
  std::vector<int> idx;
  for (int size = 0; size <= max_size; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet s;
      for (int i : idx) s.insert(elems[i]);
      if constexpr (std::is_same_v<std::invoke_result_t<Fn, VertexSet>, bool>) {
        if (!fn(s)) return false;
      } else {
        fn(s);
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

// Subsets of `base` with exactly `size` elements.
template <class Fn>
bool for_each_subset_of_size(VertexSet base, int size, Fn&& fn) {
  const std::vector<Vertex> elems = base.to_vector();
  const int m = static_cast<int>(elems.size());
  if (size > m || size < 0) return true;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(elems[i]);
    if constexpr (std::is_same_v<std::invoke_result_t<Fn, VertexSet>, bool>) {
      if (!fn(s)) return false;
    } else {
      fn(s);
    }
    int i = size - 1;
    while (i >= 0 && idx[i] == m - size + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace pw

template <>
struct std::hash<pw::VertexSet> {
  std::size_t operator()(pw::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
