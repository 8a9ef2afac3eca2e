#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsplit/errors.hpp"

#ifndef RSPLIT_SET_WORDS
#define RSPLIT_SET_WORDS 2
#endif

namespace rsplit {

/// Number of 64-bit words backing a VertexSet; fixes the largest universe.
inline constexpr std::size_t kSetWords = RSPLIT_SET_WORDS;
inline constexpr std::size_t kMaxUniverse = kSetWords * 64;

/// Subset of the vertex universe [n].
///
/// Vertices are 1-indexed at the API boundary (`insert(3)` adds vertex 3) and
/// stored at bit position v-1. Bits at positions >= n are always zero.
class VertexSet {
 public:
  using word_type = std::uint64_t;
  using storage_type = std::array<word_type, kSetWords>;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe_size);
  VertexSet(std::size_t universe_size, std::initializer_list<int> vertices);

  static VertexSet full(std::size_t universe_size);
  static VertexSet from_vertices(std::size_t universe_size,
                                 const std::vector<int>& vertices);
  /// Low `universe_size` bits of `mask`; requires universe_size <= 64.
  static VertexSet from_mask(std::size_t universe_size, std::uint64_t mask);

  std::size_t universe_size() const noexcept { return n_; }
  const storage_type& words() const noexcept { return bits_; }

  bool contains(int vertex) const;
  void insert(int vertex);
  void erase(int vertex);

  bool test_bit(std::size_t pos) const noexcept {
    return (bits_[pos >> 6] >> (pos & 63)) & 1u;
  }
  void set_bit(std::size_t pos) noexcept { bits_[pos >> 6] |= word_type{1} << (pos & 63); }

  std::size_t cardinality() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }
  /// Low 64 bits; the whole set when n <= 64.
  std::uint64_t low_mask() const noexcept { return bits_[0]; }

  VertexSet complement() const;
  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  /// Set difference.
  VertexSet operator-(const VertexSet& o) const;
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  /// Ascending 1-based vertex labels.
  std::vector<int> vertices() const;

  /// Calls f(pos) for each member bit position (0-based), ascending.
  template <class F>
  void for_each_bit(F&& f) const {
    for (std::size_t w = 0; w < kSetWords; ++w) {
      word_type x = bits_[w];
      while (x) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  bool operator==(const VertexSet& o) const = default;

  /// Canonical order: cardinality first, then lexicographic on the ascending
  /// vertex list.
  std::strong_ordering operator<=>(const VertexSet& o) const;

  std::size_t hash() const noexcept;

  /// `1,3,7`; the empty set is `-`.
  std::string to_string() const;
  static VertexSet parse(std::size_t universe_size, std::string_view text);

 private:
  void check_vertex(int vertex) const;
  void check_same_universe(const VertexSet& o) const;
  void clear_tail() noexcept;

  std::size_t n_ = 0;
  storage_type bits_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

/// Binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Calls f(subset) for every k-subset of [n] in lexicographic order of the
/// ascending vertex list.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const VertexSet&)>& f);

}  // namespace rsplit

template <>
struct std::hash<rsplit::VertexSet> {
  std::size_t operator()(const rsplit::VertexSet& s) const noexcept { return s.hash(); }
};
