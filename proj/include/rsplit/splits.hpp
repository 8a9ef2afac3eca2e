#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rsplit/graph.hpp"
#include "rsplit/hypergraph.hpp"

namespace rsplit {

/// The hypergraph of all r-splits of g in closed form: middles are the sets
/// X with r < |X| < n - r and cut_rank(X) <= r. Exhaustive; bounded by the
/// exhaustive cap.
ClosedHypergraph enumerate_r_splits(const Graph& g, std::size_t r, unsigned threads = 1);

/// Essential hyperedge for an (r+1)-set x: the inclusion-minimum member of h
/// containing x with 2|A| <= n, or nullopt when no member that small
/// contains x. Throws not_closed_error if the members containing x do not
/// intersect to a member.
std::optional<VertexSet> phi(const ClosedHypergraph& h, const VertexSet& x);

/// All defined phi values over the (r+1)-subsets of [n]. Its closure is h and
/// its size is at most C(n, r+1).
Hypergraph essential_representation(const ClosedHypergraph& h);

struct TheoremOneReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t split_middles = 0;     // middles of H_r(G)
  std::uint64_t split_total = 0;     // all members of H_r(G), implicit included
  std::size_t essential_count = 0;   // |H'|
  std::uint64_t essential_bound = 0; // C(n, r+1)
  bool closure_matches = false;      // close_full(H') == H_r(G)
  bool within_bound = false;

  bool pass() const { return closure_matches && within_bound; }
};

/// Requires g to be r-rank connected (precondition_error otherwise).
TheoremOneReport verify_theorem_one(const Graph& g, std::size_t r, unsigned threads = 1);

}  // namespace rsplit
