#include "rsplit/splits.hpp"

#include <algorithm>
#include <bit>

#include "rsplit/closure.hpp"
#include "rsplit/gf2.hpp"
#include "parallel_scan.hpp"

namespace rsplit {

ClosedHypergraph enumerate_r_splits(const Graph& g, std::size_t r, unsigned threads) {
  const std::size_t n = g.n();
  require_exhaustive(n, "r-split enumeration");
  if (n <= 2 * r + 1) return ClosedHypergraph::trivial(n, r);

  std::vector<std::uint64_t> adj(n);
  for (std::size_t u = 0; u < n; ++u) adj[u] = g.neighbors(static_cast<int>(u) + 1).low_mask();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  // Masks with vertex 1 inside; the complement of each hit is added after.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  auto chunks = detail::scan_chunks<std::vector<std::uint64_t>>(
      0, count, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> hits;
        std::uint64_t rows[64];
        for (std::uint64_t rest = lo; rest < hi; ++rest) {
          const std::uint64_t x = (rest << 1) | 1u;
          const auto size = static_cast<std::size_t>(std::popcount(x));
          if (size <= r || size + r >= n) continue;
          std::uint64_t side = x;
          std::uint64_t other = full & ~x;
          if (std::popcount(side) > std::popcount(other)) std::swap(side, other);
          std::size_t k = 0;
          while (side) {
            rows[k++] = adj[static_cast<std::size_t>(std::countr_zero(side))] & other;
            side &= side - 1;
          }
          if (gf2_rank_in_place(std::span<std::uint64_t>(rows, k)) <= r) hits.push_back(x);
        }
        return hits;
      });

  std::vector<VertexSet> middles;
  for (const auto& chunk : chunks)
    for (auto x : chunk) {
      middles.push_back(VertexSet::from_mask(n, x));
      middles.push_back(VertexSet::from_mask(n, full & ~x));
    }
  return ClosedHypergraph::assume_closed(n, r, std::move(middles));
}

namespace {

// Middles of size at most n/2, the only members phi can return: a member
// containing an (r+1)-set has size > r, and a large implicit member would need
// n - r <= n/2 together with r + 1 <= n/2, which is impossible.
std::vector<VertexSet> small_middles(const ClosedHypergraph& h) {
  std::vector<VertexSet> out;
  for (const auto& a : h.middles())
    if (2 * a.cardinality() <= h.n()) out.push_back(a);
  return out;
}

std::optional<VertexSet> phi_over(const ClosedHypergraph& h, const std::vector<VertexSet>& pool,
                                  const VertexSet& x) {
  std::optional<VertexSet> meet;
  for (const auto& a : pool) {
    if (!x.is_subset_of(a)) continue;
    meet = meet ? (*meet & a) : a;
  }
  if (meet && !h.contains(*meet))
    throw not_closed_error("input not r-closed: members containing " + x.to_string() +
                           " intersect to non-member " + meet->to_string());
  return meet;
}

}  // namespace

std::optional<VertexSet> phi(const ClosedHypergraph& h, const VertexSet& x) {
  if (x.universe_size() != h.n()) throw usage_error("phi: set universe differs");
  if (x.cardinality() != h.r() + 1)
    throw usage_error("phi: argument must have exactly r+1 = " + std::to_string(h.r() + 1) +
                      " vertices, got " + x.to_string());
  return phi_over(h, small_middles(h), x);
}

Hypergraph essential_representation(const ClosedHypergraph& h) {
  const auto pool = small_middles(h);
  Hypergraph out(h.n());
  if (pool.empty()) return out;
  for_each_combination(h.n(), h.r() + 1, [&](const VertexSet& x) {
    if (auto a = phi_over(h, pool, x)) out.insert(*a);
  });
  return out;
}

TheoremOneReport verify_theorem_one(const Graph& g, std::size_t r, unsigned threads) {
  if (auto witness = find_nontrivial_small_split(g, r, threads))
    throw precondition_error("graph is not " + std::to_string(r) +
                             "-rank connected (nontrivial cut " + witness->to_string() + ")");
  TheoremOneReport rep;
  rep.n = g.n();
  rep.r = r;
  const ClosedHypergraph splits = enumerate_r_splits(g, r, threads);
  const Hypergraph essential = essential_representation(splits);
  rep.split_middles = splits.middle_count();
  rep.split_total = splits.total_count();
  rep.essential_count = essential.size();
  rep.essential_bound = binomial(g.n(), r + 1);
  rep.closure_matches = close_full(essential, r) == splits;
  rep.within_bound = rep.essential_count <= rep.essential_bound;
  return rep;
}

}  // namespace rsplit
