#include "rsplit/closure.hpp"

#include <deque>
#include <unordered_set>

namespace rsplit {

namespace {

bool in_window(std::size_t size, std::size_t n, std::size_t r) { return size > r && size + r < n; }

}  // namespace

ClosedHypergraph close_full(const Hypergraph& h, std::size_t r) {
  const std::size_t n = h.n();
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> middles;
  std::deque<std::size_t> pending;

  auto admit = [&](const VertexSet& a) {
    if (!in_window(a.cardinality(), n, r)) return;
    if (!seen.insert(a).second) return;
    middles.push_back(a);
    pending.push_back(middles.size() - 1);
  };

  for (const auto& a : h.edges()) {
    admit(a);
    admit(a.complement());
  }

  // Each popped middle is paired with everything admitted so far, so every
  // pair is examined once the later of the two is popped. Pairs involving an
  // implicit member never yield a new middle: a small member meeting B in r
  // vertices lies inside B, and any union with a large member is large.
  while (!pending.empty()) {
    const VertexSet current = middles[pending.front()];
    pending.pop_front();
    const std::size_t known = middles.size();
    for (std::size_t i = 0; i < known; ++i) {
      const VertexSet other = middles[i];
      if ((current & other).cardinality() < r) continue;
      const VertexSet u = current | other;
      if (!in_window(u.cardinality(), n, r)) continue;
      admit(u);
      admit(u.complement());
    }
  }
  return ClosedHypergraph::assume_closed(n, r, std::move(middles));
}

ClosedHypergraph close_degenerate(const Hypergraph& h, std::size_t r) {
  const std::size_t n = h.n();
  std::vector<VertexSet> middles;
  for (const auto& a : h.edges()) {
    if (!in_window(a.cardinality(), n, r)) continue;
    middles.push_back(a);
    middles.push_back(a.complement());
  }
  return ClosedHypergraph::assume_closed(n, r, std::move(middles));
}

std::string RuleViolation::describe() const {
  return rule + " violated by (" + a.to_string() + "," + b.to_string() + "): missing " +
         missing.to_string();
}

std::vector<RuleViolation> check_derived_rules(const ClosedHypergraph& h) {
  std::vector<RuleViolation> out;
  const auto& m = h.middles();
  const std::size_t r = h.r();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      const VertexSet& a = m[i];
      const VertexSet& b = m[j];
      if (i < j && (a & b).cardinality() >= r && !h.contains(a | b))
        out.push_back({"K2", a, b, a | b});
      if (i < j && (a | b).complement().cardinality() >= r && !h.contains(a & b))
        out.push_back({"P1", a, b, a & b});
      if ((a - b).cardinality() >= r && !h.contains(b - a))
        out.push_back({"P2", a, b, b - a});
    }
  }
  return out;
}

}  // namespace rsplit
