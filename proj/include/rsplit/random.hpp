#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "rsplit/graph.hpp"
#include "rsplit/hypergraph.hpp"

namespace rsplit {

/// Seeded generator with platform-independent draws (std distributions are
/// implementation-defined, which would break byte-identical reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Each vertex joins with probability num/den.
VertexSet random_set(Rng& rng, std::size_t n, std::uint64_t num = 1, std::uint64_t den = 2);
/// Uniform subset of exactly `size` vertices.
VertexSet random_set_of_size(Rng& rng, std::size_t n, std::size_t size);
/// Erdos-Renyi with edge probability num/den.
Graph random_graph(Rng& rng, std::size_t n, std::uint64_t num, std::uint64_t den);
/// Random graph resampled until connected.
Graph random_connected_graph(Rng& rng, std::size_t n, std::uint64_t num, std::uint64_t den);
/// `edges` random hyperedges (duplicates collapse).
Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t edges);

}  // namespace rsplit
