// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "rsplit/closure.hpp"
#include "rsplit/oracle.hpp"
#include "rsplit/ortho.hpp"
#include "rsplit/random.hpp"
#include "rsplit/splits.hpp"

using namespace rsplit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_ms,
               const std::function<Outcome(void)>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double ms = ms_since(t0);
  if (limit_ms > 0 && ms >= limit_ms) {
    std::ostringstream why;
    why << "took " << ms << " ms, limit " << limit_ms << " ms";
    o.fail(why.str());
  }
  if (!o.ok) ++failures;
  std::printf("%s %d %s (%.3f ms)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), ms,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::string num(std::uint64_t v) { return std::to_string(v); }

Outcome cut_rank_golden() {
  Outcome o;
  const Graph g = testing::nine_vertex_graph();
  const VertexSet x(9, {1, 2, 3, 4, 5});
  const auto rank = cut_rank(g, x);
  if (rank != 2) o.fail("cut-rank " + num(rank));
  if (!is_r_split(g, x, 2)) o.fail("not a 2-split");
  if (is_r_split(g, x, 1)) o.fail("reported as a 1-split");
  return o;
}

Outcome closure_golden() {
  Outcome o;
  const auto in = testing::hyper(8, {{1, 2, 3}, {2, 3, 4, 5}});
  const auto full = close_full(in, 2);
  auto expected = testing::six_middles();
  std::sort(expected.begin(), expected.end());
  if (full.middles() != expected) o.fail("full closure has " + num(full.middle_count()) + " middles");
  const auto deg = close_degenerate(in, 2);
  auto four = testing::sets(8, {{1, 2, 3}, {2, 3, 4, 5}, {1, 6, 7, 8}, {4, 5, 6, 7, 8}});
  std::sort(four.begin(), four.end());
  if (deg.middles() != four) o.fail("degenerate closure has " + num(deg.middle_count()) + " middles");
  return o;
}

Outcome ortho_goldens() {
  Outcome o;
  struct Case {
    std::size_t n, r;
    std::vector<int> a, b;
    bool expected;
  };
  const std::vector<Case> cases = {
      {12, 3, {1, 2, 3}, {2, 3, 4, 5, 6}, true},
      {12, 3, {1, 2, 3, 4, 5, 6}, {4, 5, 6, 7, 8, 9}, true},
      {6, 1, {1, 2, 3}, {3, 4, 5}, false},
  };
  for (const auto& c : cases) {
    const auto a = VertexSet::from_vertices(c.n, c.a);
    const auto b = VertexSet::from_vertices(c.n, c.b);
    if (is_orthogonal(a, b, c.r) != c.expected) o.fail("formula wrong on " + a.to_string() + " / " + b.to_string());
    if (is_orthogonal_oracle(a, b, c.r) != c.expected)
      o.fail("oracle wrong on " + a.to_string() + " / " + b.to_string());
  }
  return o;
}

Outcome essential_round_trip() {
  Outcome o;
  Rng rng(4242);
  std::size_t tested = 0, drawn = 0;
  for (std::size_t r = 1; r <= 2; ++r) {
    std::size_t accepted = 0;
    while (accepted < 200) {
      const std::size_t n = rng.between(4, 10);
      const Graph g = random_connected_graph(rng, n, rng.between(1, 3), 4);
      ++drawn;
      if (!is_r_rank_connected(g, r)) continue;
      ++accepted;
      const auto h = enumerate_r_splits(g, r);
      const auto ess = essential_representation(h);
      if (!(close_full(ess, r) == h)) o.fail("round trip failed, n=" + num(n) + " r=" + num(r));
      if (ess.size() > binomial(n, r + 1)) o.fail("essential family too large, n=" + num(n));
    }
    tested += accepted;
  }
  o.detail = o.ok ? num(tested) + " rank-connected graphs of " + num(drawn) + " drawn" : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(777);
  std::size_t hypergraphs = 0;
  for (std::size_t r = 1; r <= 3; ++r)
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = rng.between(1, 12);
      const Hypergraph h = random_hypergraph(rng, n, rng.between(0, 6));
      ++hypergraphs;
      if (!oracle::agrees(oracle::brute_closure(h, r, true), close_full(h, r)))
        o.fail("close_full disagrees, n=" + num(n) + " r=" + num(r));
      if (!oracle::agrees(oracle::brute_closure(h, r, false), close_degenerate(h, r)))
        o.fail("close_degenerate disagrees, n=" + num(n) + " r=" + num(r));
    }
  std::uint64_t pairs = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t r = 0; r <= 3; ++r)
      for (std::uint64_t ma = 0; ma < (std::uint64_t{1} << n); ++ma)
        for (std::uint64_t mb = 0; mb < (std::uint64_t{1} << n); ++mb) {
          const auto a = VertexSet::from_mask(n, ma);
          const auto b = VertexSet::from_mask(n, mb);
          ++pairs;
          if (is_orthogonal(a, b, r) != is_orthogonal_oracle(a, b, r))
            o.fail("orthogonality disagrees on " + a.to_string() + " / " + b.to_string() +
                   " n=" + num(n) + " r=" + num(r));
        }
  if (o.ok) o.detail = num(hypergraphs) + " hypergraphs, " + num(pairs) + " ordered pairs";
  return o;
}

Outcome property_suite() {
  Outcome o;
  oracle::SuiteOptions opts;
  opts.profile = oracle::Profile::full;
  const auto rep = oracle::run_verification_suite(opts);
  const std::vector<std::string> tags = {
      "submodularity",         "split-union",         "derived-rules",
      "chain-union",           "closed-inter-two",    "ortho-prop-small",
      "ortho-prop-reflexive",  "ortho-prop-complement", "ortho-prop-symmetric",
      "ortho-prop-complement-side", "ortho-prop-all-complements", "ortho-prop-increasing",
      "r1-specialization",     "ortho-closure-equiv", "cross-free-equiv"};
  for (const auto& tag : tags) {
    const auto* p = rep.find(tag);
    if (!p) {
      o.fail("missing " + tag);
      continue;
    }
    if (!p->passed) o.fail(tag + " failed: " + p->counterexample);
    if (p->trials < 1000) o.fail(tag + " ran only " + num(p->trials) + " trials");
  }
  if (!rep.all_passed()) o.fail("suite has failures:\n" + rep.render());
  if (o.ok) o.detail = num(tags.size()) + " tags, seed " + num(opts.seed);
  return o;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t v = 1;
  while (e--) v *= b;
  return v;
}

Outcome family_goldens() {
  Outcome o;
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t k = 2; k <= 5; ++k) {
      const FamilyParams p(r, k);
      const Hypergraph f = build_family(p);
      const std::string tag = " (r=" + num(r) + ", k=" + num(k) + ")";
      if (f.size() != ipow(k, r)) o.fail("size " + num(f.size()) + tag);
      if (!is_cross_free(f, r)) o.fail("not cross-free" + tag);
      std::set<VertexSet> with_complements;
      std::size_t nontrivial = 0;
      for (const auto& e : f.edges()) {
        if (e.cardinality() <= r || e.cardinality() + r >= p.n()) continue;
        ++nontrivial;
        with_complements.insert(e);
        with_complements.insert(e.complement());
      }
      const auto b = crossfree_size_bounds(f, r);
      if (b.nontrivial_edges != nontrivial || b.closure_middles != with_complements.size())
        o.fail("counts " + num(b.nontrivial_edges) + "/" + num(b.closure_middles) + tag);
      if (!b.pass()) o.fail("bounds chain" + tag);
      if (!(close_full(f, r) == cross_free_closure(f, r))) o.fail("closure mismatch" + tag);
    }
  const auto b23 = crossfree_size_bounds(build_family(FamilyParams(2, 3)), 2);
  if (b23.nontrivial_edges != 9 || b23.closure_middles != 18) o.fail("r=2, k=3 chain is not 9 <= 18 <= 18");
  return o;
}

Outcome lower_bound_desk_check() {
  Outcome o;
  for (auto [r, k] : {std::pair<std::size_t, std::size_t>{1, 2}, {1, 4}, {2, 3}}) {
    const auto rep = verify_lower_bound(FamilyParams(r, k));
    if (!rep.pass() || 2 * rep.essential_count < ipow(k, r))
      o.fail("r=" + num(r) + " k=" + num(k) + " |H'|=" + num(rep.essential_count));
  }
  return o;
}

Outcome cross_free_bound() {
  Outcome o;
  std::size_t families = 0;
  const auto check = [&](const Hypergraph& h, std::size_t r, std::uint64_t materialized) {
    ++families;
    unsigned __int128 bound = 1;
    for (std::size_t i = 0; i < r; ++i) bound *= h.n();
    bound = 2 * (r + 1) * bound + 2 * static_cast<unsigned __int128>(h.size());
    if (static_cast<unsigned __int128>(materialized) > bound)
      o.fail("|clH|=" + num(materialized) + " over bound, n=" + num(h.n()) + " r=" + num(r));
  };
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t k = 2; k <= 5; ++k) {
      const Hypergraph f = build_family(FamilyParams(r, k));
      const auto cl = cross_free_closure(f, r);
      check(f, r, cl.materialize().size());
    }
  // random cross-free families, counted on the explicit oracle table
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.between(2, 12);
    const std::size_t r = rng.between(1, 3);
    Hypergraph h(n);
    for (int tries = 0; tries < 20; ++tries) {
      const VertexSet a = random_set(rng, n);
      bool ok = true;
      for (const auto& e : h.edges()) ok = ok && is_orthogonal(a, e, r);
      if (ok) h.insert(a);
    }
    check(h, r, oracle::brute_closure(h, r, true).count());
  }
  if (o.ok) o.detail = num(families) + " families";
  return o;
}

}  // namespace

int main() {
  criterion(1, "cut-rank golden", 1.0, cut_rank_golden);
  criterion(2, "closure golden", 10.0, closure_golden);
  criterion(3, "orthogonality goldens", 0, ortho_goldens);
  criterion(4, "essential round trip", 5 * 60 * 1000.0, essential_round_trip);
  criterion(5, "oracle equivalence", 0, oracle_equivalence);
  criterion(6, "property suite", 0, property_suite);
  criterion(7, "family goldens", 0, family_goldens);
  criterion(8, "lower-bound desk check", 60 * 1000.0, lower_bound_desk_check);
  criterion(9, "cross-free bound", 0, cross_free_bound);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
