#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsplit/vertex_set.hpp"

namespace rsplit {

/// Dense 0/1 matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t n_rows, std::size_t n_cols);

  /// Rows written as strings of '0'/'1', all of equal length.
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);
  /// `n_cols` must be supplied so that zero-row matrices keep their width.
  static Gf2Matrix from_strings(std::size_t n_cols, const std::vector<std::string>& rows);

  std::size_t n_rows() const noexcept { return n_rows_; }
  std::size_t n_cols() const noexcept { return n_cols_; }

  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value = true);

  std::span<const std::uint64_t> row(std::size_t i) const;
  void append_row(std::span<const std::uint64_t> words);
  /// row[dst] ^= row[src]
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  Gf2Matrix transpose() const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Row rank over GF(2) by Gaussian elimination on a copy of the rows.
std::size_t gf2_rank(const Gf2Matrix& m);

/// Rank of rows stored as fixed-width bit vectors. Eliminates in place,
/// pivoting on the lowest set bit of each surviving row.
inline std::size_t gf2_rank_in_place(std::span<VertexSet::storage_type> rows) {
  std::size_t rank = 0;
  const std::size_t count = rows.size();
  for (std::size_t i = 0; i < count; ++i) {
    auto& pivot = rows[i];
    std::size_t w = 0;
    while (w < kSetWords && pivot[w] == 0) ++w;
    if (w == kSetWords) continue;
    ++rank;
    const std::uint64_t low = pivot[w] & (~pivot[w] + 1);
    for (std::size_t j = i + 1; j < count; ++j) {
      if (rows[j][w] & low)
        for (std::size_t k = w; k < kSetWords; ++k) rows[j][k] ^= pivot[k];
    }
  }
  return rank;
}

/// Single-word variant for universes up to 64.
inline std::size_t gf2_rank_in_place(std::span<std::uint64_t> rows) {
  std::size_t rank = 0;
  const std::size_t count = rows.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t pivot = rows[i];
    if (pivot == 0) continue;
    ++rank;
    const std::uint64_t low = pivot & (~pivot + 1);
    for (std::size_t j = i + 1; j < count; ++j)
      if (rows[j] & low) rows[j] ^= pivot;
  }
  return rank;
}

}  // namespace rsplit
