#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "nestorw/errors.hpp"

namespace nestorw {

// Vertices are 1-based positions in the total order of a hypergraph.
using VertexId = int;

inline constexpr int max_vertices = 64;

// A subset of {1..64} stored as a bitmask; bit (x-1) stands for vertex x.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> vertices) {
    for (VertexId v : vertices) insert(v);
  }

  static VertexSet singleton(VertexId v) {
    VertexSet s;
    s.insert(v);
    return s;
  }
  // {1..n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static VertexSet from(const std::vector<VertexId>& vertices) {
    VertexSet s;
    for (VertexId v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  bool contains(VertexId v) const { return v >= 1 && v <= max_vertices && ((bits_ >> (v - 1)) & 1U); }
  void insert(VertexId v) {
    if (v < 1 || v > max_vertices) throw domain_error("vertex id out of range: " + std::to_string(v));
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  void erase(VertexId v) {
    if (v >= 1 && v <= max_vertices) bits_ &= ~(std::uint64_t{1} << (v - 1));
  }

  // Smallest / largest vertex; 0 on the empty set.
  VertexId min() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }
  VertexId max() const { return empty() ? 0 : 64 - std::countl_zero(bits_); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<VertexId> elements() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  // set difference
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order on subsets: lexicographic on the increasing element lists.
inline bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

struct LexLess {
  bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

// Calls f on every non-empty subset of `s`, starting from s itself.
template <typename F>
void for_each_nonempty_subset(VertexSet s, F&& f) {
  const std::uint64_t full = s.bits();
  for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) f(VertexSet(sub));
}

}  // namespace nestorw

template <>
struct std::hash<nestorw::VertexSet> {
  std::size_t operator()(nestorw::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
