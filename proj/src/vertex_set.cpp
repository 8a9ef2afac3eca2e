#include "rsplit/vertex_set.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace rsplit {

VertexSet::VertexSet(std::size_t universe_size) : n_(universe_size) {
  if (universe_size > kMaxUniverse)
    throw usage_error("universe size " + std::to_string(universe_size) +
                      " exceeds the compiled maximum of " +
                      std::to_string(kMaxUniverse));
}

VertexSet::VertexSet(std::size_t universe_size, std::initializer_list<int> vertices)
    : VertexSet(universe_size) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::full(std::size_t universe_size) {
  return VertexSet(universe_size).complement();
}

VertexSet VertexSet::from_vertices(std::size_t universe_size,
                                   const std::vector<int>& vertices) {
  VertexSet s(universe_size);
  for (int v : vertices) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe_size, std::uint64_t mask) {
  if (universe_size > 64) throw usage_error("from_mask requires n <= 64");
  VertexSet s(universe_size);
  s.bits_[0] = mask;
  s.clear_tail();
  return s;
}

void VertexSet::check_vertex(int vertex) const {
  if (vertex < 1 || static_cast<std::size_t>(vertex) > n_)
    throw usage_error("vertex " + std::to_string(vertex) + " outside [1," +
                      std::to_string(n_) + "]");
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (n_ != o.n_)
    throw usage_error("mismatched universe sizes " + std::to_string(n_) + " and " +
                      std::to_string(o.n_));
}

void VertexSet::clear_tail() noexcept {
  for (std::size_t w = 0; w < kSetWords; ++w) {
    const std::size_t lo = w * 64;
    if (n_ <= lo) {
      bits_[w] = 0;
    } else if (n_ < lo + 64) {
      bits_[w] &= (word_type{1} << (n_ - lo)) - 1;
    }
  }
}

bool VertexSet::contains(int vertex) const {
  check_vertex(vertex);
  return test_bit(static_cast<std::size_t>(vertex - 1));
}

void VertexSet::insert(int vertex) {
  check_vertex(vertex);
  set_bit(static_cast<std::size_t>(vertex - 1));
}

void VertexSet::erase(int vertex) {
  check_vertex(vertex);
  const auto pos = static_cast<std::size_t>(vertex - 1);
  bits_[pos >> 6] &= ~(word_type{1} << (pos & 63));
}

VertexSet VertexSet::complement() const {
  VertexSet r = *this;
  for (auto& w : r.bits_) w = ~w;
  r.clear_tail();
  return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r = *this;
  r |= o;
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r = *this;
  r &= o;
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  check_same_universe(o);
  VertexSet r = *this;
  for (std::size_t w = 0; w < kSetWords; ++w) r.bits_[w] &= ~o.bits_[w];
  return r;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t w = 0; w < kSetWords; ++w) bits_[w] |= o.bits_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t w = 0; w < kSetWords; ++w) bits_[w] &= o.bits_[w];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t w = 0; w < kSetWords; ++w)
    if (bits_[w] & ~o.bits_[w]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t w = 0; w < kSetWords; ++w)
    if (bits_[w] & o.bits_[w]) return true;
  return false;
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for_each_bit([&](std::size_t pos) { out.push_back(static_cast<int>(pos) + 1); });
  return out;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = cardinality() <=> o.cardinality(); c != 0) return c;
  // Equal cardinality: the set owning the lowest differing vertex has the
  // smaller ascending list.
  for (std::size_t w = 0; w < kSetWords; ++w) {
    const word_type diff = bits_[w] ^ o.bits_[w];
    if (diff) {
      const word_type low = diff & (~diff + 1);
      return (bits_[w] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t VertexSet::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (auto w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string VertexSet::to_string() const {
  if (empty()) return "-";
  std::string out;
  bool first = true;
  for_each_bit([&](std::size_t pos) {
    if (!first) out += ',';
    out += std::to_string(pos + 1);
    first = false;
  });
  return out;
}

VertexSet VertexSet::parse(std::size_t universe_size, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  VertexSet s(universe_size);
  if (text == "-") return s;
  if (text.empty()) throw usage_error("empty vertex set literal (use '-' for the empty set)");
  int prev = 0;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw usage_error("bad vertex '" + std::string(token) + "'");
    if (v <= prev)
      throw usage_error("vertex list must be strictly ascending near '" + std::string(token) +
                        "'");
    s.insert(v);
    prev = v;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw usage_error("trailing comma in vertex set");
  }
  return s;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const VertexSet&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s(n);
    for (auto i : idx) s.set_bit(i);
    f(s);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace rsplit
