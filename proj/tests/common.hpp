#pragma once

#include <initializer_list>
#include <vector>

#include "rsplit/graph.hpp"
#include "rsplit/hypergraph.hpp"

namespace rsplit::testing {

inline Graph nine_vertex_graph() {
  return Graph(9, {{1, 6}, {1, 7}, {2, 6}, {2, 8}, {3, 7}, {3, 8},
                   {1, 2}, {2, 4}, {3, 5}, {2, 5}, {7, 9}});
}

inline std::vector<VertexSet> sets(std::size_t n,
                                   std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<VertexSet> out;
  for (auto l : lists) out.emplace_back(n, l);
  return out;
}

inline Hypergraph hyper(std::size_t n, std::initializer_list<std::initializer_list<int>> lists) {
  return Hypergraph(n, sets(n, lists));
}

// The six middles of the n=8, r=2 closure of {1,2,3},{2,3,4,5}.
inline std::vector<VertexSet> six_middles() {
  return sets(8, {{1, 2, 3}, {4, 5, 6, 7, 8}, {2, 3, 4, 5}, {1, 6, 7, 8}, {1, 2, 3, 4, 5}, {6, 7, 8}});
}

}  // namespace rsplit::testing
