#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsplit/vertex_set.hpp"

namespace rsplit {

/// Largest n accepted by exhaustive 2^n scans. Defaults to 24; the
/// RSPLIT_MAX_N environment variable overrides it.
std::size_t exhaustive_cap();

/// Throws too_large_error when n exceeds exhaustive_cap().
void require_exhaustive(std::size_t n, const char* what);

/// Simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

  /// Rejects self-loops and duplicate edges.
  void add_edge(int u, int v);

  std::size_t n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  const VertexSet& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;
  bool is_connected() const;

  /// Text format: `#` comments, header `n m`, then m lines `u v` with u < v.
  static Graph parse(std::istream& in);
  static Graph parse(const std::string& text);
  void write(std::ostream& out) const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
};

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
/// Sides {1..a} and {a+1..a+b}.
Graph make_complete_bipartite(std::size_t a, std::size_t b);

/// GF(2) rank of the adjacency submatrix with rows x and columns V \ x.
std::size_t cut_rank(const Graph& g, const VertexSet& x);

inline bool is_r_split(const Graph& g, const VertexSet& x, std::size_t r) {
  return cut_rank(g, x) <= r;
}

/// rho(x) == min(|x|, n - |x|).
bool is_trivial_cut(const Graph& g, const VertexSet& x);

/// Every k-split with k < r is trivial. Exhaustive over subsets containing
/// vertex 1; throws too_large_error above exhaustive_cap().
bool is_r_rank_connected(const Graph& g, std::size_t r, unsigned threads = 1);

/// First nontrivial cut of rank < r found in the scan above, if any.
std::optional<VertexSet> find_nontrivial_small_split(const Graph& g, std::size_t r,
                                                     unsigned threads = 1);

}  // namespace rsplit
