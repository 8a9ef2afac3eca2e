#include "rsplit/ortho.hpp"

#include "rsplit/closure.hpp"
#include "rsplit/graph.hpp"
#include "rsplit/splits.hpp"

namespace rsplit {

bool is_orthogonal(const VertexSet& a, const VertexSet& b, std::size_t r) {
  const VertexSet both = a & b;
  const VertexSet outside = (a | b).complement();
  const VertexSet only_a = a - b;
  const VertexSet only_b = b - a;
  const std::size_t n_both = both.cardinality();
  const std::size_t n_outside = outside.cardinality();
  const std::size_t n_only_a = only_a.cardinality();
  const std::size_t n_only_b = only_b.cardinality();

  const bool first = n_both < r || only_a.empty() || only_b.empty() || n_outside < r ||
                     (n_both == r && n_outside == r);
  const bool second = n_only_a < r || both.empty() || outside.empty() || n_only_b < r ||
                      (n_only_a == r && n_only_b == r);
  return first && second;
}

bool is_orthogonal_oracle(const VertexSet& a, const VertexSet& b, std::size_t r) {
  if (a.universe_size() != b.universe_size()) throw usage_error("orthogonality: universes differ");
  require_exhaustive(a.universe_size(), "orthogonality oracle");
  const Hypergraph pair(a.universe_size(), {a, b});
  return close_full(pair, r) == close_degenerate(pair, r);
}

CrossFreeResult check_cross_free(const Hypergraph& h, std::size_t r) {
  const auto& e = h.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!is_orthogonal(e[i], e[j], r)) return {false, std::make_pair(e[i], e[j])};
  return {};
}

ClosedHypergraph cross_free_closure(const Hypergraph& h, std::size_t r) {
  if (auto res = check_cross_free(h, r); !res)
    throw precondition_error("input is not " + std::to_string(r) + "-cross-free: (" +
                             res.crossing->first.to_string() + " ; " +
                             res.crossing->second.to_string() + ") cross");
  return close_degenerate(h, r);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("bound overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("bound overflows 64 bits");
  return out;
}

}  // namespace

CrossFreeBounds crossfree_size_bounds(const Hypergraph& h, std::size_t r) {
  const ClosedHypergraph closed = cross_free_closure(h, r);
  CrossFreeBounds rep;
  rep.n = h.n();
  rep.r = r;
  rep.family_size = h.size();
  for (const auto& a : h.edges())
    if (closed.is_middle_size(a.cardinality())) ++rep.nontrivial_edges;
  rep.closure_middles = closed.middle_count();
  rep.closure_total = closed.total_count();

  std::uint64_t power = 1;
  for (std::size_t i = 0; i < r; ++i) power = checked_mul(power, h.n());
  rep.total_bound =
      checked_add(checked_mul(checked_mul(2, r + 1), power), checked_mul(2, h.size()));

  rep.lower_ok = rep.nontrivial_edges <= rep.closure_middles;
  rep.upper_ok = rep.closure_middles <= 2 * rep.nontrivial_edges;
  rep.total_ok = rep.closure_total <= rep.total_bound;
  return rep;
}

FamilyParams::FamilyParams(std::size_t r, std::size_t k) : r_(r), k_(k) {
  if (r < 1) throw usage_error("family: r must be at least 1");
  if (k < 2) throw usage_error("family: k must be at least 2");
  if (k * (r + 1) > kMaxUniverse)
    throw usage_error("family: n = k(r+1) = " + std::to_string(k * (r + 1)) +
                      " exceeds the compiled maximum");
}

int FamilyParams::vertex_id(std::size_t value, std::size_t colour) const {
  if (value >= k_ || colour < 1 || colour > r_ + 1) throw usage_error("family: bad (value, colour)");
  return static_cast<int>((colour - 1) * k_ + value + 1);
}

Hypergraph build_family(const FamilyParams& p) {
  const std::size_t r = p.r();
  const std::size_t k = p.k();
  Hypergraph out(p.n());
  // values[0..r-1] range freely; the last colour's value closes the sum.
  std::vector<std::size_t> values(r, 0);
  while (true) {
    VertexSet edge(p.n());
    std::size_t sum = 0;
    for (std::size_t c = 0; c < r; ++c) {
      edge.insert(p.vertex_id(values[c], c + 1));
      sum += values[c];
    }
    edge.insert(p.vertex_id((k - sum % k) % k, r + 1));
    out.insert(edge);

    std::size_t pos = 0;
    while (pos < r && ++values[pos] == k) values[pos++] = 0;
    if (pos == r) break;
  }
  return out;
}

LowerBoundReport verify_lower_bound(const FamilyParams& p) {
  require_exhaustive(p.n(), "lower-bound check");
  LowerBoundReport rep;
  rep.r = p.r();
  rep.k = p.k();
  rep.n = p.n();
  const Hypergraph family = build_family(p);
  rep.family_size = family.size();
  rep.cross_free = is_cross_free(family, p.r());
  if (!rep.cross_free) return rep;
  const ClosedHypergraph closed = cross_free_closure(family, p.r());
  rep.closure_middles = closed.middle_count();
  const Hypergraph essential = essential_representation(closed);
  rep.essential_count = essential.size();
  rep.round_trip = close_full(essential, p.r()) == closed;
  rep.bound_holds = 2 * rep.essential_count >= rep.family_size;
  return rep;
}

}  // namespace rsplit
