#include "rsplit/oracle.hpp"

#include <bit>
#include <utility>

namespace rsplit::oracle {

namespace {

std::size_t bit_count(std::uint32_t x) { return static_cast<std::size_t>(std::popcount(x)); }

void require_oracle_size(std::size_t n) {
  if (n > kMaxOracleN)
    throw too_large_error("oracle: n=" + std::to_string(n) + " above the oracle cap of " +
                          std::to_string(kMaxOracleN));
}

}  // namespace

std::size_t ExplicitFamily::count() const {
  std::size_t c = 0;
  for (char m : member) c += m ? 1 : 0;
  return c;
}

std::vector<std::uint32_t> ExplicitFamily::masks() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < member.size(); ++m)
    if (member[m]) out.push_back(m);
  return out;
}

std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t mask = 0;
  for (int v : s.vertices()) mask |= std::uint32_t{1} << (v - 1);
  return mask;
}

VertexSet from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (std::size_t v = 1; v <= n; ++v)
    if (mask & (std::uint32_t{1} << (v - 1))) s.insert(static_cast<int>(v));
  return s;
}

ExplicitFamily brute_closure(const Hypergraph& h, std::size_t r, bool use_union_rule) {
  const std::size_t n = h.n();
  require_oracle_size(n);
  const std::uint32_t universe = std::uint32_t{1} << n;
  const std::uint32_t full = universe - 1;
  ExplicitFamily f{n, std::vector<char>(universe, 0)};
  for (const auto& e : h.edges()) f.member[to_mask(e)] = 1;
  for (std::uint32_t m = 0; m < universe; ++m)
    if (bit_count(m) <= r) f.member[m] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    const auto current = f.masks();
    for (auto a : current) {
      const std::uint32_t c = full & ~a;
      if (!f.member[c]) {
        f.member[c] = 1;
        changed = true;
      }
    }
    if (!use_union_rule) continue;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const std::uint32_t a = current[i];
        const std::uint32_t b = current[j];
        if (bit_count(a & b) < r) continue;
        if (!f.member[a | b]) {
          f.member[a | b] = 1;
          changed = true;
        }
      }
  }
  return f;
}

std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] ^= rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t brute_cut_rank(const Graph& g, const VertexSet& x) {
  const auto inside = x.vertices();
  const auto outside = x.complement().vertices();
  std::vector<std::vector<std::uint8_t>> rows(inside.size(),
                                              std::vector<std::uint8_t>(outside.size(), 0));
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = 0; j < outside.size(); ++j)
      rows[i][j] = g.adjacent(inside[i], outside[j]) ? 1 : 0;
  return dense_rank(std::move(rows));
}

ExplicitFamily brute_splits(const Graph& g, std::size_t r) {
  const std::size_t n = g.n();
  require_oracle_size(n);
  const std::uint32_t universe = std::uint32_t{1} << n;
  ExplicitFamily f{n, std::vector<char>(universe, 0)};
  for (std::uint32_t m = 0; m < universe; ++m)
    f.member[m] = brute_cut_rank(g, from_mask(n, m)) <= r ? 1 : 0;
  return f;
}

bool brute_orthogonal(const VertexSet& a, const VertexSet& b, std::size_t r) {
  const Hypergraph pair(a.universe_size(), {a, b});
  return brute_closure(pair, r, true).member == brute_closure(pair, r, false).member;
}

bool agrees(const ExplicitFamily& f, const ClosedHypergraph& h) {
  if (f.n != h.n()) return false;
  for (std::uint32_t m = 0; m < f.member.size(); ++m)
    if (f.has(m) != h.contains(from_mask(f.n, m))) return false;
  return true;
}

Profile parse_profile(const std::string& s) {
  if (s == "quick") return Profile::quick;
  if (s == "full") return Profile::full;
  throw usage_error("unknown profile '" + s + "' (expected quick or full)");
}

bool VerificationReport::all_passed() const {
  for (const auto& p : properties)
    if (!p.passed) return false;
  return true;
}

const PropertyResult* VerificationReport::find(const std::string& tag) const {
  for (const auto& p : properties)
    if (p.tag == tag) return &p;
  return nullptr;
}

std::string VerificationReport::render() const {
  std::string out;
  for (const auto& p : properties) {
    out += p.passed ? "PASS " : "FAIL ";
    out += p.tag;
    out += " trials=" + std::to_string(p.trials);
    if (!p.counterexample.empty()) out += " " + p.counterexample;
    out += '\n';
  }
  return out;
}

}  // namespace rsplit::oracle
