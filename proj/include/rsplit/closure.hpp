#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rsplit/hypergraph.hpp"

namespace rsplit {

/// Least family containing `h` that holds every set of size <= r and is
/// closed under complement and under unions of members meeting in >= r
/// vertices. Worklist fixpoint over the middle hyperedges only.
ClosedHypergraph close_full(const Hypergraph& h, std::size_t r);

/// Same without the union rule: the input middles and their complements.
ClosedHypergraph close_degenerate(const Hypergraph& h, std::size_t r);

struct RuleViolation {
  std::string rule;  // "K2", "P1" or "P2"
  VertexSet a;
  VertexSet b;
  VertexSet missing;

  std::string describe() const;
  bool operator==(const RuleViolation&) const = default;
};

/// Checks the union rule and the derived intersection/difference rules over
/// every ordered pair of middles. Empty result means all hold. The
/// large-set rule holds by representation.
std::vector<RuleViolation> check_derived_rules(const ClosedHypergraph& h);

}  // namespace rsplit
