#include "rsplit/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace rsplit {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

VertexSet random_set(Rng& rng, std::size_t n, std::uint64_t num, std::uint64_t den) {
  VertexSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng.chance(num, den)) s.set_bit(i);
  return s;
}

VertexSet random_set_of_size(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  VertexSet s(n);
  for (std::size_t i = 0; i < size && i < n; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(pos[i], pos[j]);
    s.set_bit(pos[i]);
  }
  return s;
}

Graph random_graph(Rng& rng, std::size_t n, std::uint64_t num, std::uint64_t den) {
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v)
      if (rng.chance(num, den)) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

Graph random_connected_graph(Rng& rng, std::size_t n, std::uint64_t num, std::uint64_t den) {
  while (true) {
    Graph g = random_graph(rng, n, num, den);
    if (g.is_connected()) return g;
  }
}

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t edges) {
  Hypergraph h(n);
  for (std::size_t i = 0; i < edges; ++i) h.insert(random_set_of_size(rng, n, rng.between(0, n)));
  return h;
}

}  // namespace rsplit
