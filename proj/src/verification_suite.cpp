// Randomized and exhaustive property checks across every module, driven by a
// single seeded generator so that a given (seed, profile) always produces the
// same report.

#include <algorithm>
#include <optional>
#include <sstream>

#include "rsplit/closure.hpp"
#include "rsplit/gf2.hpp"
#include "rsplit/oracle.hpp"
#include "rsplit/ortho.hpp"
#include "rsplit/random.hpp"
#include "rsplit/splits.hpp"

namespace rsplit::oracle {

namespace {

using Outcome = std::optional<std::string>;

std::string show(const Graph& g) {
  std::string s = "g=" + std::to_string(g.n()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    s += (first ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return s;
}

std::string show(const Hypergraph& h) {
  std::string s = "H=" + std::to_string(h.n()) + ":{";
  bool first = true;
  for (const auto& e : h.edges()) {
    s += (first ? "" : " ") + e.to_string();
    first = false;
  }
  return s + "}";
}

std::string show(const char* name, const VertexSet& s) { return std::string(name) + "=" + s.to_string(); }

bool middles_subset(const ClosedHypergraph& small, const ClosedHypergraph& big) {
  return std::includes(big.middles().begin(), big.middles().end(), small.middles().begin(),
                       small.middles().end());
}

class Runner {
 public:
  explicit Runner(const SuiteOptions& opt)
      : rng_(opt.seed), full_(opt.profile == Profile::full), rank_(opt.cut_rank) {
    if (!rank_) rank_ = [](const Graph& g, const VertexSet& x) { return cut_rank(g, x); };
  }

  std::size_t trials(std::size_t quick, std::size_t full) const { return full_ ? full : quick; }
  bool full() const { return full_; }
  Rng& rng() { return rng_; }
  std::size_t rank(const Graph& g, const VertexSet& x) const { return rank_(g, x); }

  /// Runs body(i) for i in [0, count); stops at the first counterexample.
  template <class Body>
  void property(const std::string& tag, std::size_t count, Body body) {
    PropertyResult res{tag, true, 0, {}};
    for (std::size_t i = 0; i < count; ++i) {
      ++res.trials;
      Outcome bad;
      try {
        bad = body(i);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (bad) {
        res.passed = false;
        res.counterexample = *bad;
        break;
      }
    }
    report_.properties.push_back(std::move(res));
  }

  VerificationReport take() { return std::move(report_); }

  // Generators shared by several properties.
  Graph graph(std::size_t lo, std::size_t hi) {
    const std::size_t n = rng_.between(lo, hi);
    const std::uint64_t num = rng_.between(1, 3);
    return random_graph(rng_, n, num, 4);
  }

  /// Connected graph on n in [lo, hi] that is r-rank connected.
  Graph connected_graph(std::size_t r, std::size_t lo, std::size_t hi) {
    while (true) {
      const std::size_t n = rng_.between(lo, hi);
      Graph g = random_connected_graph(rng_, n, rng_.between(1, 3), 4);
      if (is_r_rank_connected(g, r)) return g;
    }
  }

  Hypergraph hypergraph(std::size_t n, std::size_t lo, std::size_t hi) {
    return random_hypergraph(rng_, n, rng_.between(lo, hi));
  }

  /// B drawn from a mix that hits the orthogonal cases often: nested,
  /// disjoint, co-covering, complementary or unrelated.
  VertexSet partner(const VertexSet& a) {
    const std::size_t n = a.universe_size();
    const VertexSet noise = random_set(rng_, n);
    switch (rng_.below(6)) {
      case 0: return a & noise;
      case 1: return a | noise;
      case 2: return a.complement() & noise;
      case 3: return a.complement() | noise;
      case 4: return a.complement();
      default: return noise;
    }
  }

  /// Greedy r-cross-free family of up to `target` random sets.
  Hypergraph cross_free(std::size_t n, std::size_t r, std::size_t target) {
    Hypergraph h(n);
    for (std::size_t attempt = 0; attempt < 6 * target && h.size() < target; ++attempt) {
      const VertexSet a = h.empty() ? random_set(rng_, n) : partner(h.edges()[rng_.below(h.size())]);
      bool ok = true;
      for (const auto& e : h.edges()) ok = ok && is_orthogonal(a, e, r);
      if (ok) h.insert(a);
    }
    return h;
  }

 private:
  Rng rng_;
  bool full_;
  CutRankFn rank_;
  VerificationReport report_;
};

Gf2Matrix random_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols) {
  const std::size_t rows = rng.between(0, max_rows);
  const std::size_t cols = rng.between(0, max_cols);
  Gf2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.chance(1, 2)) m.set(i, j);
  return m;
}

std::vector<std::vector<std::uint8_t>> dense(const Gf2Matrix& m) {
  std::vector<std::vector<std::uint8_t>> out(m.n_rows(), std::vector<std::uint8_t>(m.n_cols()));
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j) out[i][j] = m.get(i, j) ? 1 : 0;
  return out;
}

void gf2_properties(Runner& run) {
  const std::size_t t = run.trials(200, 1000);
  run.property("gf2-rank-transpose", t, [&](std::size_t) -> Outcome {
    const auto m = random_matrix(run.rng(), 12, 12);
    if (gf2_rank(m) != gf2_rank(m.transpose()))
      return "rank differs from transpose on " + std::to_string(m.n_rows()) + "x" +
             std::to_string(m.n_cols());
    return {};
  });
  run.property("gf2-rank-xor-row", t, [&](std::size_t) -> Outcome {
    auto m = random_matrix(run.rng(), 10, 12);
    const std::size_t before = gf2_rank(m);
    std::vector<std::uint64_t> combo((m.n_cols() + 63) / 64, 0);
    for (std::size_t i = 0; i < m.n_rows(); ++i)
      if (run.rng().chance(1, 2))
        for (std::size_t k = 0; k < combo.size(); ++k) combo[k] ^= m.row(i)[k];
    m.append_row(combo);
    if (gf2_rank(m) != before) return std::string("appending a row combination changed the rank");
    return {};
  });
  run.property("gf2-rank-row-permutation", t, [&](std::size_t) -> Outcome {
    auto m = random_matrix(run.rng(), 12, 12);
    const std::size_t before = gf2_rank(m);
    for (std::size_t i = m.n_rows(); i > 1; --i) m.swap_rows(i - 1, run.rng().below(i));
    if (gf2_rank(m) != before) return std::string("row permutation changed the rank");
    return {};
  });
  run.property("gf2-rank-dense-oracle", t, [&](std::size_t) -> Outcome {
    const auto m = random_matrix(run.rng(), 16, 16);
    if (gf2_rank(m) != dense_rank(dense(m))) return std::string("packed and dense ranks differ");
    return {};
  });
  run.property("set-cardinality-identity", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(0, kMaxUniverse);
    const VertexSet a = random_set(run.rng(), n), b = random_set(run.rng(), n);
    if ((a | b).cardinality() + (a & b).cardinality() != a.cardinality() + b.cardinality())
      return show("A", a) + " " + show("B", b);
    if (a.complement().complement() != a) return "double complement differs for " + show("A", a);
    return {};
  });
}

void graph_properties(Runner& run) {
  const std::size_t t = run.trials(200, 1000);
  run.property("cut-rank-symmetry", t, [&](std::size_t) -> Outcome {
    const Graph g = run.graph(1, 12);
    const VertexSet x = random_set(run.rng(), g.n());
    if (run.rank(g, x) != run.rank(g, x.complement())) return show(g) + " " + show("X", x);
    return {};
  });
  run.property("cut-rank-bound", t, [&](std::size_t) -> Outcome {
    const Graph g = run.graph(1, 12);
    const VertexSet x = random_set(run.rng(), g.n());
    const std::size_t k = x.cardinality();
    if (run.rank(g, x) > std::min(k, g.n() - k)) return show(g) + " " + show("X", x);
    return {};
  });
  run.property("cut-rank-dense-oracle", t, [&](std::size_t) -> Outcome {
    const Graph g = run.graph(1, 12);
    const VertexSet x = random_set(run.rng(), g.n());
    if (run.rank(g, x) != brute_cut_rank(g, x)) return show(g) + " " + show("X", x);
    return {};
  });
  run.property("submodularity", t, [&](std::size_t) -> Outcome {
    const Graph g = run.graph(2, 12);
    const VertexSet x = random_set(run.rng(), g.n()), y = random_set(run.rng(), g.n());
    if (run.rank(g, x | y) + run.rank(g, x & y) > run.rank(g, x) + run.rank(g, y))
      return show(g) + " " + show("X", x) + " " + show("Y", y);
    return {};
  });
  run.property("split-union", t, [&](std::size_t) -> Outcome {
    const std::size_t r = run.rng().between(1, 2);
    const Graph g = run.connected_graph(r, 2 * r + 2, 9);
    const auto splits = brute_splits(g, r).masks();
    std::vector<std::uint32_t> wide;
    for (auto m : splits)
      if (static_cast<std::size_t>(std::popcount(m)) >= r) wide.push_back(m);
    const std::uint32_t x = wide[run.rng().below(wide.size())];
    std::vector<std::uint32_t> partners;
    for (auto m : splits)
      if (static_cast<std::size_t>(std::popcount(m & x)) >= r) partners.push_back(m);
    const std::uint32_t y = partners[run.rng().below(partners.size())];
    const VertexSet u = from_mask(g.n(), x | y);
    if (!is_r_split(g, u, r))
      return show(g) + " r=" + std::to_string(r) + " " + show("X", from_mask(g.n(), x)) + " " +
             show("Y", from_mask(g.n(), y));
    return {};
  });
  run.property("rank-lower-bound", t, [&](std::size_t) -> Outcome {
    const std::size_t r = run.rng().between(1, 2);
    const Graph g = run.connected_graph(r, 2 * r, 10);
    const VertexSet x = random_set_of_size(run.rng(), g.n(), run.rng().between(r, g.n() - r));
    if (cut_rank(g, x) < r) return show(g) + " r=" + std::to_string(r) + " " + show("X", x);
    return {};
  });
  run.property("trivial-split-characterization", t, [&](std::size_t) -> Outcome {
    const std::size_t r = run.rng().between(1, 2);
    const Graph g = run.connected_graph(r, 2 * r, 10);
    const VertexSet x = random_set(run.rng(), g.n());
    const bool small_side = x.cardinality() <= r || g.n() - x.cardinality() <= r;
    const bool trivial_split = is_r_split(g, x, r) && is_trivial_cut(g, x);
    if (trivial_split != small_side) return show(g) + " r=" + std::to_string(r) + " " + show("X", x);
    return {};
  });
  run.property("splits-oracle", run.trials(100, 400), [&](std::size_t) -> Outcome {
    const Graph g = run.graph(1, 11);
    const std::size_t r = run.rng().between(0, 3);
    if (!agrees(brute_splits(g, r), enumerate_r_splits(g, r))) return show(g) + " r=" + std::to_string(r);
    return {};
  });
}

void hypergraph_properties(Runner& run) {
  const std::size_t t = run.trials(200, 1000);
  run.property("empty-closure-census", run.trials(60, 200), [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(0, 12);
    const std::size_t r = run.rng().between(0, 4);
    const auto cl = ClosedHypergraph::trivial(n, r);
    const auto brute = brute_closure(Hypergraph(n), r, true);
    if (cl.implicit_count() != brute.count() || !agrees(brute, cl))
      return "n=" + std::to_string(n) + " r=" + std::to_string(r);
    if (n > 2 * r) {
      std::uint64_t expect = 0;
      for (std::size_t i = 0; i <= r; ++i) expect += 2 * binomial(n, i);
      if (cl.implicit_count() != expect) return "census n=" + std::to_string(n) + " r=" + std::to_string(r);
    }
    return {};
  });
  run.property("normalize-idempotent", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 9);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.hypergraph(n, 0, 3);
    const auto once = normalize(close_full(h, r).materialize(), r);
    const auto twice = normalize(once.materialize(), r);
    if (!(once == twice) || !(once == close_full(h, r))) return show(h) + " r=" + std::to_string(r);
    return {};
  });
  run.property("complement-membership", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 12);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.hypergraph(n, 1, 4);
    const auto cl = close_full(h, r);
    const VertexSet a = cl.middles().empty() || run.rng().chance(1, 3)
                            ? random_set(run.rng(), n)
                            : cl.middles()[run.rng().below(cl.middle_count())];
    if (cl.contains(a) != cl.contains(a.complement())) return show(h) + " " + show("A", a);
    return {};
  });
  run.property("closure-system-intersection", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 10);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h1 = run.hypergraph(n, 1, 3), h2 = run.hypergraph(n, 1, 3);
    const auto both = intersection(close_full(h1, r), close_full(h2, r));
    const auto b1 = brute_closure(h1, r, true), b2 = brute_closure(h2, r, true);
    ExplicitFamily meet{n, std::vector<char>(b1.member.size())};
    for (std::size_t m = 0; m < meet.member.size(); ++m) meet.member[m] = b1.member[m] && b2.member[m];
    if (!agrees(meet, both)) return show(h1) + " " + show(h2) + " r=" + std::to_string(r);
    return {};
  });
}

void closure_properties(Runner& run) {
  const std::size_t t = run.trials(200, 1000);
  run.property("closure-extensive", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 16);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.hypergraph(n, 0, 5);
    const auto cl = close_full(h, r);
    for (const auto& e : h.edges())
      if (!cl.contains(e)) return show(h) + " r=" + std::to_string(r);
    return {};
  });
  run.property("closure-monotone", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 14);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.hypergraph(n, 0, 3);
    Hypergraph bigger = h;
    const Hypergraph extra = run.hypergraph(n, 1, 2);
    for (const auto& e : extra.edges()) bigger.insert(e);
    if (!middles_subset(close_full(h, r), close_full(bigger, r)))
      return show(h) + " " + show(bigger) + " r=" + std::to_string(r);
    return {};
  });
  run.property("closure-idempotent", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 8);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.hypergraph(n, 0, 4);
    const auto cl = close_full(h, r);
    if (!(close_full(cl.materialize(), r) == cl)) return show(h) + " r=" + std::to_string(r);
    return {};
  });
  run.property("degenerate-within-full", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 16);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.hypergraph(n, 0, 5);
    if (!middles_subset(close_degenerate(h, r), close_full(h, r))) return show(h) + " r=" + std::to_string(r);
    return {};
  });
  const std::size_t max_n = run.full() ? 12 : 10;
  run.property("closure-brute-oracle", run.trials(200, 500), [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, max_n);
    const std::size_t r = run.rng().between(1, 3);
    const Hypergraph h = run.hypergraph(n, 1, 4);
    if (!agrees(brute_closure(h, r, true), close_full(h, r))) return show(h) + " r=" + std::to_string(r);
    return {};
  });
  run.property("degenerate-brute-oracle", run.trials(200, 500), [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, max_n);
    const std::size_t r = run.rng().between(1, 3);
    const Hypergraph h = run.hypergraph(n, 1, 4);
    if (!agrees(brute_closure(h, r, false), close_degenerate(h, r)))
      return show(h) + " r=" + std::to_string(r);
    return {};
  });
  run.property("derived-rules", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 8);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.hypergraph(n, 1, 4);
    const auto cl = close_full(h, r);
    if (auto v = check_derived_rules(cl); !v.empty()) return show(h) + " " + v.front().describe();
    // The same rules over every explicit member pair, large-set rule included.
    const auto fam = brute_closure(h, r, true);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const auto masks = fam.masks();
    for (std::uint32_t m = 0; m <= full; ++m)
      if (static_cast<std::size_t>(std::popcount(m)) + r >= n && !fam.has(m))
        return show(h) + " large set missing";
    for (auto a : masks)
      for (auto b : masks) {
        if (static_cast<std::size_t>(std::popcount(full & ~(a | b))) >= r && !fam.has(a & b))
          return show(h) + " intersection rule fails";
        if (static_cast<std::size_t>(std::popcount(a & ~b)) >= r && !fam.has(b & ~a))
          return show(h) + " difference rule fails";
      }
    return {};
  });
}

void splits_properties(Runner& run) {
  const std::size_t t = run.trials(200, 1000);
  auto closed_instance = [&](std::size_t lo_n, std::size_t hi_n) {
    const std::size_t n = run.rng().between(lo_n, hi_n);
    const std::size_t r = run.rng().between(1, 2);
    return close_full(run.hypergraph(n, 1, 4), r);
  };
  run.property("chain-union", t, [&](std::size_t) -> Outcome {
    const auto cl = closed_instance(4, 10);
    const auto members = cl.materialize().edges();
    const std::size_t r = cl.r();
    std::vector<VertexSet> chain{members[run.rng().below(members.size())]};
    const std::size_t length = run.rng().between(2, 5);
    while (chain.size() < length) {
      std::vector<VertexSet> next;
      for (const auto& m : members)
        if ((m & chain.back()).cardinality() >= r) next.push_back(m);
      if (next.empty()) break;
      chain.push_back(next[run.rng().below(next.size())]);
    }
    VertexSet u(cl.n());
    for (const auto& a : chain) u |= a;
    if (!cl.contains(u)) return "chain union " + u.to_string() + " missing";
    return {};
  });
  run.property("closed-inter-two", t, [&](std::size_t) -> Outcome {
    const auto cl = closed_instance(4, 10);
    std::vector<VertexSet> half;
    const Hypergraph all = cl.materialize();
    for (const auto& m : all.edges())
      if (2 * m.cardinality() <= cl.n()) half.push_back(m);
    const VertexSet a = half[run.rng().below(half.size())];
    const VertexSet b = half[run.rng().below(half.size())];
    if (!cl.contains(a & b)) return show("A", a) + " " + show("B", b) + " r=" + std::to_string(cl.r());
    return {};
  });
  run.property("essential-round-trip", t, [&](std::size_t) -> Outcome {
    const auto cl = closed_instance(2, 11);
    const Hypergraph ess = essential_representation(cl);
    if (ess.size() > binomial(cl.n(), cl.r() + 1)) return "essential family above C(n,r+1)";
    if (!(close_full(ess, cl.r()) == cl)) return show(ess) + " does not regenerate its source";
    return {};
  });
  run.property("split-essential-round-trip", run.trials(100, 1000), [&](std::size_t) -> Outcome {
    const std::size_t r = run.rng().between(1, 2);
    const Graph g = run.connected_graph(r, 2, 10);
    const auto rep = verify_theorem_one(g, r);
    if (!rep.pass()) return show(g) + " r=" + std::to_string(r);
    return {};
  });
}

void ortho_properties(Runner& run) {
  const std::size_t t = run.trials(200, 1000);

  if (run.full()) {
    std::vector<std::tuple<std::size_t, std::uint32_t, std::uint32_t, std::size_t>> cases;
    for (std::size_t n = 0; n <= 8; ++n)
      for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t b = 0; b < (1u << n); ++b)
          for (std::size_t r = 0; r <= 3; ++r) cases.emplace_back(n, a, b, r);
    run.property("ortho-formula-oracle", cases.size(), [&](std::size_t i) -> Outcome {
      const auto [n, am, bm, r] = cases[i];
      const VertexSet a = from_mask(n, am), b = from_mask(n, bm);
      if (is_orthogonal(a, b, r) != is_orthogonal_oracle(a, b, r))
        return show("A", a) + " " + show("B", b) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
      return {};
    });
  } else {
    run.property("ortho-formula-oracle", 2000, [&](std::size_t) -> Outcome {
      const std::size_t n = run.rng().between(0, 8);
      const std::size_t r = run.rng().between(0, 3);
      const VertexSet a = random_set(run.rng(), n), b = run.partner(a);
      if (is_orthogonal(a, b, r) != is_orthogonal_oracle(a, b, r))
        return show("A", a) + " " + show("B", b) + " r=" + std::to_string(r);
      return {};
    });
  }
  run.property("ortho-definition-brute", run.trials(300, 1000), [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(0, 8);
    const std::size_t r = run.rng().between(0, 3);
    const VertexSet a = random_set(run.rng(), n), b = run.partner(a);
    if (is_orthogonal(a, b, r) != brute_orthogonal(a, b, r))
      return show("A", a) + " " + show("B", b) + " r=" + std::to_string(r);
    return {};
  });

  auto pair = [&](std::size_t& r) {
    const std::size_t n = run.rng().between(0, 10);
    r = run.rng().between(0, 4);
    const VertexSet a = random_set(run.rng(), n);
    return std::make_pair(a, run.partner(a));
  };
  run.property("ortho-prop-small", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(0, 10);
    const std::size_t r = run.rng().between(0, 4);
    const VertexSet a = random_set_of_size(run.rng(), n, run.rng().between(0, std::min(r, n)));
    const VertexSet b = run.partner(a);
    if (!is_orthogonal(a, b, r)) return show("A", a) + " " + show("B", b);
    return {};
  });
  run.property("ortho-prop-reflexive", t, [&](std::size_t) -> Outcome {
    std::size_t r = 0;
    const auto [a, b] = pair(r);
    if (!is_orthogonal(a, a, r)) return show("A", a) + " r=" + std::to_string(r);
    return {};
  });
  run.property("ortho-prop-complement", t, [&](std::size_t) -> Outcome {
    std::size_t r = 0;
    const auto [a, b] = pair(r);
    if (!is_orthogonal(a, a.complement(), r)) return show("A", a) + " r=" + std::to_string(r);
    return {};
  });
  run.property("ortho-prop-symmetric", t, [&](std::size_t) -> Outcome {
    std::size_t r = 0;
    const auto [a, b] = pair(r);
    if (is_orthogonal(a, b, r) != is_orthogonal(b, a, r)) return show("A", a) + " " + show("B", b);
    return {};
  });
  run.property("ortho-prop-complement-side", t, [&](std::size_t) -> Outcome {
    std::size_t r = 0;
    const auto [a, b] = pair(r);
    if (is_orthogonal(a, b, r) && !is_orthogonal(a, b.complement(), r))
      return show("A", a) + " " + show("B", b);
    return {};
  });
  run.property("ortho-prop-all-complements", t, [&](std::size_t) -> Outcome {
    std::size_t r = 0;
    const auto [a, b] = pair(r);
    if (!is_orthogonal(a, b, r)) return {};
    for (const auto& x : {a, a.complement()})
      for (const auto& y : {b, b.complement()})
        if (!is_orthogonal(x, y, r)) return show("A", a) + " " + show("B", b);
    return {};
  });
  run.property("ortho-prop-increasing", t, [&](std::size_t) -> Outcome {
    std::size_t r = 0;
    const auto [a, b] = pair(r);
    if (is_orthogonal(a, b, r) && !is_orthogonal(a, b, r + 1)) return show("A", a) + " " + show("B", b);
    return {};
  });

  {
    std::vector<std::tuple<std::size_t, std::uint32_t, std::uint32_t>> cases;
    for (std::size_t n = 5; n <= 7; ++n)
      for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t b = 0; b < (1u << n); ++b) cases.emplace_back(n, a, b);
    run.property("r1-specialization", cases.size(), [&](std::size_t i) -> Outcome {
      const auto [n, am, bm] = cases[i];
      const VertexSet a = from_mask(n, am), b = from_mask(n, bm);
      const bool laminar = a.is_subset_of(b) || b.is_subset_of(a) || !a.intersects(b) ||
                           (a | b) == VertexSet::full(n);
      if (is_orthogonal(a, b, 1) != laminar) return show("A", a) + " " + show("B", b);
      return {};
    });
  }

  run.property("singleton-closure", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(0, 12);
    const std::size_t r = run.rng().between(0, 3);
    const VertexSet a = random_set(run.rng(), n);
    const auto cl = close_full(Hypergraph(n, {a}), r);
    for (const auto& m : cl.middles())
      if (m != a && m != a.complement()) return show("A", a) + " r=" + std::to_string(r);
    return {};
  });
  run.property("ortho-closure-equiv", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(0, 8);
    const std::size_t r = run.rng().between(0, 3);
    const VertexSet a = random_set(run.rng(), n), b = run.partner(a);
    const auto ca = close_full(Hypergraph(n, {a}), r);
    const auto cb = close_full(Hypergraph(n, {b}), r);
    std::vector<VertexSet> joined = ca.middles();
    joined.insert(joined.end(), cb.middles().begin(), cb.middles().end());
    const bool split = close_full(Hypergraph(n, {a, b}), r) ==
                       ClosedHypergraph::assume_closed(n, r, std::move(joined));
    if (split != is_orthogonal(a, b, r)) return show("A", a) + " " + show("B", b) + " r=" + std::to_string(r);
    return {};
  });
  run.property("cross-free-equiv", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 7);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.rng().chance(1, 2) ? run.cross_free(n, r, run.rng().between(1, 4))
                                                : run.hypergraph(n, 1, 3);
    if (is_cross_free(h, r) != is_cross_free(close_full(h, r).materialize(), r))
      return show(h) + " r=" + std::to_string(r);
    return {};
  });
  run.property("cross-free-decomposition", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 12);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.cross_free(n, r, run.rng().between(1, 6));
    if (!(cross_free_closure(h, r) == close_full(h, r))) return show(h) + " r=" + std::to_string(r);
    return {};
  });
  run.property("cross-free-inequality", t, [&](std::size_t) -> Outcome {
    const std::size_t n = run.rng().between(1, 12);
    const std::size_t r = run.rng().between(0, 3);
    const Hypergraph h = run.cross_free(n, r, run.rng().between(1, 6));
    if (!crossfree_size_bounds(h, r).pass()) return show(h) + " r=" + std::to_string(r);
    return {};
  });

  {
    std::vector<std::tuple<std::size_t, VertexSet, VertexSet>> cases;
    for (std::size_t r = 1; r <= 3; ++r)
      for (std::size_t k = 2; k <= 5; ++k) {
        const auto fam = build_family(FamilyParams(r, k));
        for (std::size_t i = 0; i < fam.size(); ++i)
          for (std::size_t j = i + 1; j < fam.size(); ++j) cases.emplace_back(r, fam.edges()[i], fam.edges()[j]);
      }
    run.property("family-sharpness", cases.size(), [&](std::size_t i) -> Outcome {
      const auto& [r, a, b] = cases[i];
      if ((a & b).cardinality() >= r) return show("A", a) + " " + show("B", b);
      return {};
    });
  }
}

}  // namespace

VerificationReport run_verification_suite(const SuiteOptions& options) {
  Runner run(options);
  gf2_properties(run);
  graph_properties(run);
  hypergraph_properties(run);
  closure_properties(run);
  splits_properties(run);
  ortho_properties(run);
  return run.take();
}

}  // namespace rsplit::oracle
