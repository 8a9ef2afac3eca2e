#include <doctest.h>

#include <sstream>

#include "common.hpp"
#include "rsplit/gf2.hpp"
#include "rsplit/graph.hpp"
#include "rsplit/random.hpp"

using namespace rsplit;
using rsplit::testing::nine_vertex_graph;

TEST_CASE("gf2 rank examples") {
  CHECK(gf2_rank(Gf2Matrix::from_strings({"100", "010", "001"})) == 3);
  CHECK(gf2_rank(Gf2Matrix::from_strings({"1100", "1010", "0110", "0000", "0000"})) == 2);
  CHECK(gf2_rank(Gf2Matrix::from_strings(5, {})) == 0);
  CHECK(gf2_rank(Gf2Matrix(0, 5)) == 0);
  CHECK(gf2_rank(Gf2Matrix(3, 0)) == 0);
}

TEST_CASE("gf2 rank across word boundaries") {
  Gf2Matrix m(3, 130);
  m.set(0, 0);
  m.set(0, 129);
  m.set(1, 129);
  m.set(2, 0);
  CHECK(gf2_rank(m) == 2);
  CHECK(gf2_rank(m.transpose()) == 2);
}

TEST_CASE("gf2 rejects ragged rows") {
  CHECK_THROWS_AS(Gf2Matrix::from_strings({"10", "1"}), usage_error);
  CHECK_THROWS_AS(Gf2Matrix::from_strings({"12"}), usage_error);
}

TEST_CASE("set operations") {
  const VertexSet a(8, {1, 2, 3});
  const VertexSet b(8, {2, 3, 4, 5});
  CHECK((a & b) == VertexSet(8, {2, 3}));
  CHECK(a.complement() == VertexSet(8, {4, 5, 6, 7, 8}));
  CHECK((a - b).cardinality() == 1);
  CHECK((a | b).cardinality() + (a & b).cardinality() == a.cardinality() + b.cardinality());
}

TEST_CASE("vertex set text and order") {
  CHECK(VertexSet::parse(5, "1,3,5") == VertexSet(5, {1, 3, 5}));
  CHECK(VertexSet::parse(5, "-").empty());
  CHECK(VertexSet(5).to_string() == "-");
  CHECK(VertexSet(5, {2, 4}).to_string() == "2,4");
  CHECK_THROWS_AS(VertexSet::parse(5, "3,1"), usage_error);
  CHECK_THROWS_AS(VertexSet::parse(5, "1,6"), usage_error);
  CHECK_THROWS_AS(VertexSet::parse(5, "1,,2"), usage_error);
  // cardinality first, then lexicographic on the sorted vertex list
  CHECK(VertexSet(9, {9}) < VertexSet(9, {1, 2}));
  CHECK(VertexSet(9, {1, 9}) < VertexSet(9, {2, 3}));
  CHECK(VertexSet(9, {1, 2, 9}) < VertexSet(9, {1, 3, 4}));
  CHECK_THROWS_AS(VertexSet(4, {5}), usage_error);
}

TEST_CASE("binomial and combinations") {
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(3, 5) == 0);
  std::size_t count = 0;
  std::vector<VertexSet> seen;
  for_each_combination(5, 2, [&](const VertexSet& c) {
    ++count;
    seen.push_back(c);
  });
  CHECK(count == 10);
  CHECK(seen.front() == VertexSet(5, {1, 2}));
  CHECK(seen[1] == VertexSet(5, {1, 3}));
  CHECK(seen.back() == VertexSet(5, {4, 5}));
}

TEST_CASE("cut-rank goldens") {
  const Graph g = nine_vertex_graph();
  const VertexSet x(9, {1, 2, 3, 4, 5});
  CHECK(cut_rank(g, x) == 2);
  CHECK(is_r_split(g, x, 2));
  CHECK_FALSE(is_r_split(g, x, 1));
  CHECK(cut_rank(g, VertexSet(9)) == 0);
  CHECK(cut_rank(g, VertexSet::full(9)) == 0);
  CHECK(cut_rank(make_path(3), VertexSet(3, {2})) == 1);
  CHECK(is_r_split(make_cycle(4), VertexSet(4, {1, 3}), 1));
}

TEST_CASE("trivial cuts") {
  const Graph g = nine_vertex_graph();
  CHECK(is_trivial_cut(g, VertexSet(9, {9})));
  CHECK_FALSE(is_trivial_cut(g, VertexSet(9, {1, 2, 3, 4, 5})));
  CHECK(is_trivial_cut(g, VertexSet(9)));
}

TEST_CASE("rank connectivity") {
  CHECK(is_r_rank_connected(make_cycle(5), 2));
  CHECK_FALSE(is_r_rank_connected(make_complete_bipartite(3, 3), 2));
  CHECK(is_r_rank_connected(make_complete_bipartite(3, 3), 1));
  CHECK(is_r_rank_connected(make_cycle(5), 0));
  // two components: the component is a nontrivial 0-split
  CHECK_FALSE(is_r_rank_connected(Graph(4, {{1, 2}, {3, 4}}), 1));
  const auto w = find_nontrivial_small_split(make_complete_bipartite(3, 3), 2);
  REQUIRE(w.has_value());
  CHECK(cut_rank(make_complete_bipartite(3, 3), *w) < 2);
  CHECK_FALSE(is_trivial_cut(make_complete_bipartite(3, 3), *w));
}

TEST_CASE("rank connectivity is thread-count independent") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_connected_graph(rng, 10, 1, 3);
    for (std::size_t r = 1; r <= 3; ++r)
      CHECK(find_nontrivial_small_split(g, r, 1) == find_nontrivial_small_split(g, r, 3));
  }
}

TEST_CASE("exhaustive cap") {
  CHECK_THROWS_AS(is_r_rank_connected(make_path(40), 1), too_large_error);
  try {
    is_r_rank_connected(make_path(40), 1);
  } catch (const too_large_error& e) {
    CHECK(std::string(e.what()).find("too large for exhaustive check") != std::string::npos);
  }
}

TEST_CASE("graph parsing") {
  const Graph g = Graph::parse("# comment\n3 2\n1 2\n2 3\n");
  CHECK(g.n() == 3);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(3, 2));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK_THROWS_AS(Graph::parse("3 1\n1 1\n"), parse_error);
  CHECK_THROWS_AS(Graph::parse("3 2\n1 2\n1 2\n"), parse_error);
  CHECK_THROWS_AS(Graph::parse("3 2\n1 2\n"), parse_error);
  CHECK_THROWS_AS(Graph::parse("3 1\n2 1\n"), parse_error);
  CHECK_THROWS_AS(Graph::parse("3 1\n1 4\n"), parse_error);
  std::ostringstream out;
  nine_vertex_graph().write(out);
  const Graph back = Graph::parse(out.str());
  CHECK(back.edges() == nine_vertex_graph().edges());
}
