#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace brt {

using EdgeIndex = std::size_t;

/// Subset of the edges of a graph with at most 64 edges.
class EdgeSet {
 public:
  static constexpr std::size_t kMaxEdges = 64;

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSet all(std::size_t edge_count) {
    return EdgeSet(edge_count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edge_count) - 1);
  }
  static EdgeSet of(const std::vector<EdgeIndex>& edges) {
    EdgeSet s;
    for (EdgeIndex e : edges) s.insert(e);
    return s;
  }

  constexpr bool contains(EdgeIndex e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(EdgeIndex e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(EdgeIndex e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr EdgeSet with(EdgeIndex e) const { EdgeSet s = *this; s.insert(e); return s; }
  constexpr EdgeSet without(EdgeIndex e) const { EdgeSet s = *this; s.erase(e); return s; }

  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr EdgeSet complement(std::size_t edge_count) const { return EdgeSet(all(edge_count).bits_ & ~bits_); }
  constexpr bool subset_of(EdgeSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(EdgeSet, EdgeSet) = default;
  friend constexpr auto operator<=>(EdgeSet, EdgeSet) = default;

  std::vector<EdgeIndex> elements() const {
    std::vector<EdgeIndex> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<EdgeIndex>(std::countr_zero(b)));
    return out;
  }

  /// Every subset of this set, in increasing order of the packed bits.
  template <typename Fn>
  void for_each_subset(Fn&& fn) const {
    std::uint64_t sub = 0;
    do {
      fn(EdgeSet(sub));
      sub = (sub - bits_) & bits_;
    } while (sub != 0);
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace brt
