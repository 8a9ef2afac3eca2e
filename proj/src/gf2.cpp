#include "rsplit/gf2.hpp"

#include <algorithm>
#include <utility>

namespace rsplit {

Gf2Matrix::Gf2Matrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), stride_((n_cols + 63) / 64),
      data_(n_rows * stride_, 0) {}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  return from_strings(rows.empty() ? 0 : rows.front().size(), rows);
}

Gf2Matrix Gf2Matrix::from_strings(std::size_t n_cols, const std::vector<std::string>& rows) {
  Gf2Matrix m(rows.size(), n_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n_cols) throw usage_error("ragged GF(2) matrix row");
    for (std::size_t j = 0; j < n_cols; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw usage_error("GF(2) entries must be 0 or 1");
      if (c == '1') m.set(i, j);
    }
  }
  return m;
}

bool Gf2Matrix::get(std::size_t row, std::size_t col) const {
  if (row >= n_rows_ || col >= n_cols_) throw usage_error("GF(2) index out of range");
  return (data_[row * stride_ + col / 64] >> (col % 64)) & 1u;
}

void Gf2Matrix::set(std::size_t row, std::size_t col, bool value) {
  if (row >= n_rows_ || col >= n_cols_) throw usage_error("GF(2) index out of range");
  auto& w = data_[row * stride_ + col / 64];
  const std::uint64_t bit = std::uint64_t{1} << (col % 64);
  w = value ? (w | bit) : (w & ~bit);
}

std::span<const std::uint64_t> Gf2Matrix::row(std::size_t i) const {
  return {data_.data() + i * stride_, stride_};
}

void Gf2Matrix::append_row(std::span<const std::uint64_t> words) {
  if (words.size() != stride_) throw usage_error("appended row has the wrong width");
  if (n_cols_ % 64 && !words.empty() &&
      (words.back() >> (n_cols_ % 64)) != 0)
    throw usage_error("appended row has bits past n_cols");
  data_.insert(data_.end(), words.begin(), words.end());
  ++n_rows_;
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) {
  for (std::size_t k = 0; k < stride_; ++k) data_[dst * stride_ + k] ^= data_[src * stride_ + k];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(n_cols_, n_rows_);
  for (std::size_t i = 0; i < n_rows_; ++i)
    for (std::size_t j = 0; j < n_cols_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

std::size_t gf2_rank(const Gf2Matrix& m) {
  if (m.n_rows() == 0 || m.n_cols() == 0) return 0;
  Gf2Matrix work = m;
  const std::size_t stride = (m.n_cols() + 63) / 64;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < work.n_rows(); ++i) {
    const auto pivot = work.row(i);
    std::size_t w = 0;
    while (w < stride && pivot[w] == 0) ++w;
    if (w == stride) continue;
    ++rank;
    const std::uint64_t low = pivot[w] & (~pivot[w] + 1);
    for (std::size_t j = i + 1; j < work.n_rows(); ++j)
      if (work.row(j)[w] & low) work.add_row(j, i);
  }
  return rank;
}

}  // namespace rsplit
