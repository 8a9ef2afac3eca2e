#include <doctest.h>

#include "common.hpp"
#include "rsplit/closure.hpp"
#include "rsplit/oracle.hpp"
#include "rsplit/splits.hpp"

using namespace rsplit;
using rsplit::testing::hyper;

TEST_CASE("brute closure census") {
  CHECK(oracle::brute_closure(Hypergraph(5), 2, true).count() == 32);
  CHECK(oracle::brute_closure(Hypergraph(5), 1, true).count() == 12);
  CHECK_THROWS_AS(oracle::brute_closure(Hypergraph(15), 1, true), too_large_error);
}

TEST_CASE("brute closure matches the closure goldens") {
  const auto in = hyper(8, {{1, 2, 3}, {2, 3, 4, 5}});
  CHECK(oracle::agrees(oracle::brute_closure(in, 2, true), close_full(in, 2)));
  CHECK(oracle::agrees(oracle::brute_closure(in, 2, false), close_degenerate(in, 2)));
  CHECK_FALSE(oracle::agrees(oracle::brute_closure(in, 2, true), close_degenerate(in, 2)));
  const auto c4 = hyper(4, {{1, 3}, {2, 4}});
  CHECK(oracle::agrees(oracle::brute_closure(c4, 1, true), close_full(c4, 1)));
}

TEST_CASE("dense rank and brute splits") {
  CHECK(oracle::dense_rank({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}) == 2);
  CHECK(oracle::dense_rank({}) == 0);
  const Graph g = rsplit::testing::nine_vertex_graph();
  CHECK(oracle::brute_cut_rank(g, VertexSet(9, {1, 2, 3, 4, 5})) == 2);
  CHECK(oracle::agrees(oracle::brute_splits(make_cycle(4), 1), enumerate_r_splits(make_cycle(4), 1)));
}

TEST_CASE("mask conversion") {
  const VertexSet s(10, {1, 4, 10});
  CHECK(oracle::to_mask(s) == 0b1000001001u);
  CHECK(oracle::from_mask(10, oracle::to_mask(s)) == s);
}

TEST_CASE("suite is deterministic and passes") {
  oracle::SuiteOptions opts;
  const auto a = oracle::run_verification_suite(opts);
  const auto b = oracle::run_verification_suite(opts);
  CHECK(a.render() == b.render());
  CHECK(a.all_passed());
  if (!a.all_passed()) MESSAGE(a.render());
}

TEST_CASE("suite reports a broken rank routine") {
  oracle::SuiteOptions opts;
  opts.cut_rank = [](const Graph& g, const VertexSet& x) {
    const std::size_t r = cut_rank(g, x);
    return r * r;
  };
  const auto rep = oracle::run_verification_suite(opts);
  const auto* sub = rep.find("submodularity");
  REQUIRE(sub != nullptr);
  CHECK_FALSE(sub->passed);
  CHECK_FALSE(sub->counterexample.empty());
  CHECK_FALSE(rep.all_passed());
}

TEST_CASE("profile names") {
  CHECK(oracle::parse_profile("quick") == oracle::Profile::quick);
  CHECK(oracle::parse_profile("full") == oracle::Profile::full);
  CHECK_THROWS_AS(oracle::parse_profile("slow"), usage_error);
}
