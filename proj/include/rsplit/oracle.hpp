#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rsplit/graph.hpp"
#include "rsplit/hypergraph.hpp"

// Brute-force references. Nothing here shares code with the engines they
// check: families are explicit membership tables indexed by 32-bit masks and
// matrices are dense byte grids.
namespace rsplit::oracle {

inline constexpr std::size_t kMaxOracleN = 14;

/// Explicit family over [n]: member[mask] for every mask < 2^n.
struct ExplicitFamily {
  std::size_t n = 0;
  std::vector<char> member;

  bool has(std::uint32_t mask) const { return member[mask] != 0; }
  std::size_t count() const;
  /// Member masks in ascending numeric order.
  std::vector<std::uint32_t> masks() const;
};

std::uint32_t to_mask(const VertexSet& s);
VertexSet from_mask(std::size_t n, std::uint32_t mask);

/// Starts from h plus every set of size <= r, then applies complementation and
/// (when enabled) the union rule in full passes until nothing changes.
ExplicitFamily brute_closure(const Hypergraph& h, std::size_t r, bool use_union_rule);

/// Rank over GF(2) of a dense 0/1 matrix by column-wise pivot search.
std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> rows);

/// Cut-rank from adjacency queries and dense_rank.
std::size_t brute_cut_rank(const Graph& g, const VertexSet& x);

/// Every X (as mask) with brute_cut_rank(X) <= r.
ExplicitFamily brute_splits(const Graph& g, std::size_t r);

/// Orthogonality straight from the definition on explicit families.
bool brute_orthogonal(const VertexSet& a, const VertexSet& b, std::size_t r);

/// Same members in the explicit family and the closed form.
bool agrees(const ExplicitFamily& f, const ClosedHypergraph& h);

enum class Profile { quick, full };
Profile parse_profile(const std::string& s);

struct PropertyResult {
  std::string tag;
  bool passed = true;
  std::size_t trials = 0;
  std::string counterexample;
};

struct VerificationReport {
  std::vector<PropertyResult> properties;

  bool all_passed() const;
  const PropertyResult* find(const std::string& tag) const;
  /// One line per property: `PASS|FAIL <tag> trials=<N>[ <counterexample>]`.
  std::string render() const;
};

using CutRankFn = std::function<std::size_t(const Graph&, const VertexSet&)>;

struct SuiteOptions {
  std::uint64_t seed = 20230601;
  Profile profile = Profile::quick;
  /// Replaces the engine cut-rank in the cut-rank properties (fault
  /// injection); defaults to rsplit::cut_rank.
  CutRankFn cut_rank;
};

VerificationReport run_verification_suite(const SuiteOptions& options);

}  // namespace rsplit::oracle
