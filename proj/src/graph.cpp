#include "rsplit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "rsplit/gf2.hpp"
#include "parallel_scan.hpp"

namespace rsplit {

std::size_t exhaustive_cap() {
  if (const char* env = std::getenv("RSPLIT_MAX_N")) {
    std::size_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size()) return std::min<std::size_t>(value, 62);
  }
  return 24;
}

void require_exhaustive(std::size_t n, const char* what) {
  if (n > exhaustive_cap() || n > 62)
    throw too_large_error(std::string(what) + ": n=" + std::to_string(n) +
                          " too large for exhaustive check (cap " +
                          std::to_string(exhaustive_cap()) + ")");
}

Graph::Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n_ || static_cast<std::size_t>(v) > n_)
    throw usage_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " has an endpoint outside [1," + std::to_string(n_) + "]");
  if (u == v) throw usage_error("self-loop at vertex " + std::to_string(u));
  if (adj_[static_cast<std::size_t>(u - 1)].contains(v))
    throw usage_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[static_cast<std::size_t>(u - 1)].insert(v);
  adj_[static_cast<std::size_t>(v - 1)].insert(u);
  ++m_;
}

const VertexSet& Graph::neighbors(int v) const {
  if (v < 1 || static_cast<std::size_t>(v) > n_)
    throw usage_error("vertex " + std::to_string(v) + " out of range");
  return adj_[static_cast<std::size_t>(v - 1)];
}

bool Graph::adjacent(int u, int v) const { return neighbors(u).contains(v); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u)
    adj_[u].for_each_bit([&](std::size_t v) {
      if (v > u) out.emplace_back(static_cast<int>(u) + 1, static_cast<int>(v) + 1);
    });
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  VertexSet seen(n_);
  seen.set_bit(0);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    adj_[u].for_each_bit([&](std::size_t v) {
      if (!seen.test_bit(v)) {
        seen.set_bit(v);
        stack.push_back(v);
      }
    });
  }
  return seen.cardinality() == n_;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph Graph::parse(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw parse_error("graph: missing 'n m' header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
      throw parse_error("graph line " + std::to_string(line_no) + ": expected 'n m'");
  }
  if (static_cast<unsigned long long>(n) > kMaxUniverse)
    throw parse_error("graph: n=" + std::to_string(n) + " exceeds the compiled maximum");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no))
      throw parse_error("graph: expected " + std::to_string(m) + " edges, found " +
                        std::to_string(i));
    std::istringstream es(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      throw parse_error("graph line " + std::to_string(line_no) + ": expected 'u v'");
    if (u == v)
      throw parse_error("graph line " + std::to_string(line_no) + ": self-loop at vertex " +
                        std::to_string(u));
    if (u < 1 || v > n || u > v)
      throw parse_error("graph line " + std::to_string(line_no) +
                        ": edges must satisfy 1 <= u < v <= n");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw parse_error("graph line " + std::to_string(line_no) + ": duplicate edge " +
                        std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line(in, line, line_no))
    throw parse_error("graph line " + std::to_string(line_no) + ": more edges than declared");
  return g;
}

Graph Graph::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

void Graph::write(std::ostream& out) const {
  out << n_ << ' ' << m_ << '\n';
  for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
}

Graph make_path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(static_cast<int>(i), static_cast<int>(i) + 1);
  return g;
}

Graph make_cycle(std::size_t n) {
  Graph g = make_path(n);
  if (n >= 3) g.add_edge(1, static_cast<int>(n));
  return g;
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t u = 1; u <= a; ++u)
    for (std::size_t v = a + 1; v <= a + b; ++v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

namespace {

// Rank of the cut given as a low-word mask; requires n <= 64.
std::size_t cut_rank_small(const std::vector<std::uint64_t>& adj, std::uint64_t x,
                           std::uint64_t full) {
  std::uint64_t rows_side = x;
  std::uint64_t cols_side = full & ~x;
  if (std::popcount(rows_side) > std::popcount(cols_side)) std::swap(rows_side, cols_side);
  std::uint64_t rows[64];
  std::size_t count = 0;
  while (rows_side) {
    const int u = std::countr_zero(rows_side);
    rows_side &= rows_side - 1;
    rows[count++] = adj[static_cast<std::size_t>(u)] & cols_side;
  }
  return gf2_rank_in_place(std::span<std::uint64_t>(rows, count));
}

std::vector<std::uint64_t> low_adjacency(const Graph& g) {
  std::vector<std::uint64_t> adj(g.n());
  for (std::size_t u = 0; u < g.n(); ++u) adj[u] = g.neighbors(static_cast<int>(u) + 1).low_mask();
  return adj;
}

std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

std::size_t cut_rank(const Graph& g, const VertexSet& x) {
  if (x.universe_size() != g.n()) throw usage_error("cut_rank: set universe differs from graph");
  VertexSet rows_side = x;
  VertexSet cols_side = x.complement();
  if (rows_side.cardinality() > cols_side.cardinality()) std::swap(rows_side, cols_side);
  std::vector<VertexSet::storage_type> rows;
  rows.reserve(rows_side.cardinality());
  rows_side.for_each_bit([&](std::size_t u) {
    rows.push_back((g.neighbors(static_cast<int>(u) + 1) & cols_side).words());
  });
  return gf2_rank_in_place(std::span<VertexSet::storage_type>(rows));
}

bool is_trivial_cut(const Graph& g, const VertexSet& x) {
  const std::size_t k = x.cardinality();
  return cut_rank(g, x) == std::min(k, g.n() - k);
}

std::optional<VertexSet> find_nontrivial_small_split(const Graph& g, std::size_t r,
                                                     unsigned threads) {
  const std::size_t n = g.n();
  if (n == 0 || r == 0) return std::nullopt;
  require_exhaustive(n, "r-rank connectivity");
  const auto adj = low_adjacency(g);
  const std::uint64_t full = full_mask(n);
  // Vertex 1 is pinned inside X; the remaining n-1 bits vary.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  auto hits = detail::scan_chunks<std::uint64_t>(0, count, threads, [&](std::uint64_t lo,
                                                                       std::uint64_t hi) {
    for (std::uint64_t rest = lo; rest < hi; ++rest) {
      const std::uint64_t x = (rest << 1) | 1u;
      const auto size = static_cast<std::size_t>(std::popcount(x));
      const std::size_t side = std::min(size, n - size);
      if (side < 1) continue;
      const std::size_t rank = cut_rank_small(adj, x, full);
      if (rank < r && rank != side) return x;
    }
    return kNone;
  });
  for (auto h : hits)
    if (h != kNone) return VertexSet::from_mask(n, h);
  return std::nullopt;
}

bool is_r_rank_connected(const Graph& g, std::size_t r, unsigned threads) {
  return !find_nontrivial_small_split(g, r, threads).has_value();
}

}  // namespace rsplit
