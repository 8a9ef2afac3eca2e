#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "rsplit/hypergraph.hpp"

namespace rsplit {

/// r-orthogonality from the two-conjunct characterization:
///   (|A∩B| < r or A⊆B or B⊆A or |V∖(A∪B)| < r or |A∩B| = |V∖(A∪B)| = r) and
///   (|A∖B| < r or A∩B = ∅ or A∪B = V or |B∖A| < r or |A∖B| = |B∖A| = r).
bool is_orthogonal(const VertexSet& a, const VertexSet& b, std::size_t r);

/// Definitional check: the full closure of {a, b} equals its closure without
/// the union rule. Bounded by the exhaustive cap.
bool is_orthogonal_oracle(const VertexSet& a, const VertexSet& b, std::size_t r);

struct CrossFreeResult {
  bool cross_free = true;
  /// First crossing pair in canonical order, when not cross-free.
  std::optional<std::pair<VertexSet, VertexSet>> crossing;

  explicit operator bool() const { return cross_free; }
};

CrossFreeResult check_cross_free(const Hypergraph& h, std::size_t r);
inline bool is_cross_free(const Hypergraph& h, std::size_t r) {
  return check_cross_free(h, r).cross_free;
}

/// Closure of a cross-free family without a fixpoint: its middles and their
/// complements. Throws precondition_error when h is not r-cross-free.
ClosedHypergraph cross_free_closure(const Hypergraph& h, std::size_t r);

struct CrossFreeBounds {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t family_size = 0;        // |H|
  std::size_t nontrivial_edges = 0;   // |H ∖ cl∅|
  std::size_t closure_middles = 0;    // |cl(H) ∖ cl∅|
  std::uint64_t closure_total = 0;    // |cl(H)|
  std::uint64_t total_bound = 0;      // 2(r+1)n^r + 2|H|
  bool lower_ok = false;              // nontrivial_edges <= closure_middles
  bool upper_ok = false;              // closure_middles <= 2 * nontrivial_edges
  bool total_ok = false;              // closure_total <= total_bound

  bool pass() const { return lower_ok && upper_ok && total_ok; }
};

CrossFreeBounds crossfree_size_bounds(const Hypergraph& h, std::size_t r);

/// Parameters of the lower-bound family on n = k(r+1) vertices.
class FamilyParams {
 public:
  /// Requires r >= 1 and k >= 2.
  FamilyParams(std::size_t r, std::size_t k);

  std::size_t r() const noexcept { return r_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return k_ * (r_ + 1); }

  /// Vertex label of value v in [0, k) and colour c in [1, r+1]:
  /// (c - 1) * k + v + 1.
  int vertex_id(std::size_t value, std::size_t colour) const;

 private:
  std::size_t r_;
  std::size_t k_;
};

/// All sets with one vertex per colour whose values sum to 0 mod k; k^r
/// hyperedges of size r+1.
Hypergraph build_family(const FamilyParams& p);

struct LowerBoundReport {
  std::size_t r = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t family_size = 0;     // |H_n| = k^r
  bool cross_free = false;
  std::size_t closure_middles = 0;
  std::size_t essential_count = 0; // |H'|
  bool round_trip = false;         // close_full(H') == cl(H_n)
  bool bound_holds = false;        // 2|H'| >= |H_n|

  bool pass() const { return cross_free && round_trip && bound_holds; }
};

LowerBoundReport verify_lower_bound(const FamilyParams& p);

}  // namespace rsplit
