#include "rsplit/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "rsplit/graph.hpp"

namespace rsplit {

namespace {

void canonicalize(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool sorted_contains(const std::vector<VertexSet>& sets, const VertexSet& a) {
  return std::binary_search(sets.begin(), sets.end(), a);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    return true;
  }
  return false;
}

std::size_t parse_count(const std::string& s, std::size_t line_no, const char* what) {
  std::istringstream is(s);
  long long v = -1;
  std::string extra;
  if (!(is >> v) || (is >> extra) || v < 0)
    throw parse_error("hypergraph line " + std::to_string(line_no) + ": expected " + what);
  return static_cast<std::size_t>(v);
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.universe_size() != n_)
      throw usage_error("hyperedge " + e.to_string() + " has universe " +
                        std::to_string(e.universe_size()) + ", expected " + std::to_string(n_));
  canonicalize(edges_);
}

bool Hypergraph::contains(const VertexSet& a) const { return sorted_contains(edges_, a); }

bool Hypergraph::insert(const VertexSet& a) {
  if (a.universe_size() != n_) throw usage_error("hyperedge universe differs from hypergraph");
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), a);
  if (it != edges_.end() && *it == a) return false;
  edges_.insert(it, a);
  return true;
}

void Hypergraph::write(std::ostream& out) const {
  out << n_ << '\n';
  for (const auto& e : edges_) out << e.to_string() << '\n';
}

Hypergraph Hypergraph::parse(std::istream& in) {
  auto file = parse_hypergraph_file(in);
  if (auto* h = std::get_if<Hypergraph>(&file)) return std::move(*h);
  throw parse_error("expected a plain hypergraph, found a closed-hypergraph file");
}

Hypergraph Hypergraph::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

ClosedHypergraph ClosedHypergraph::trivial(std::size_t n, std::size_t r) {
  if (n > kMaxUniverse) throw usage_error("universe too large");
  return ClosedHypergraph(n, r, {});
}

ClosedHypergraph ClosedHypergraph::assume_closed(std::size_t n, std::size_t r,
                                                 std::vector<VertexSet> middles) {
  ClosedHypergraph h(n, r, {});
  for (const auto& a : middles) {
    if (a.universe_size() != n) throw usage_error("middle " + a.to_string() + " has the wrong universe");
    if (!h.is_middle_size(a.cardinality()))
      throw usage_error("set " + a.to_string() + " is not a middle for n=" + std::to_string(n) +
                        ", r=" + std::to_string(r));
  }
  canonicalize(middles);
  for (const auto& a : middles)
    if (!sorted_contains(middles, a.complement()))
      throw not_closed_error("not complement closed (" + a.to_string() + ")");
  h.middles_ = std::move(middles);
  return h;
}

bool ClosedHypergraph::is_implicit(const VertexSet& a) const noexcept {
  return !is_middle_size(a.cardinality());
}

bool ClosedHypergraph::contains(const VertexSet& a) const {
  if (a.universe_size() != n_) throw usage_error("contains: set universe differs");
  return is_implicit(a) || sorted_contains(middles_, a);
}

std::uint64_t ClosedHypergraph::implicit_count() const {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n_; ++k) {
    if (is_middle_size(k)) continue;
    if (__builtin_add_overflow(total, binomial(n_, k), &total))
      throw std::overflow_error("implicit member count overflows 64 bits");
  }
  return total;
}

Hypergraph ClosedHypergraph::materialize() const {
  require_exhaustive(n_, "materialize");
  std::vector<VertexSet> all;
  for (std::size_t k = 0; k <= n_; ++k) {
    if (is_middle_size(k)) continue;
    for_each_combination(n_, k, [&](const VertexSet& s) { all.push_back(s); });
  }
  all.insert(all.end(), middles_.begin(), middles_.end());
  return Hypergraph(n_, std::move(all));
}

void ClosedHypergraph::write(std::ostream& out) const {
  out << n_ << '\n' << "r " << r_ << '\n';
  for (const auto& a : middles_) out << a.to_string() << '\n';
  out << "implicit cl-empty\n";
}

ClosedHypergraph normalize(const Hypergraph& h, std::size_t r) {
  const std::size_t n = h.n();
  std::vector<VertexSet> middles;
  for (const auto& a : h.edges()) {
    const auto k = a.cardinality();
    if (k > r && k + r < n) middles.push_back(a);
  }
  ClosedHypergraph closed = ClosedHypergraph::assume_closed(n, r, std::move(middles));
  const auto& m = closed.middles();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if ((m[i] & m[j]).cardinality() < r) continue;
      if (!closed.contains(m[i] | m[j]))
        throw not_closed_error("K2 violated by (" + m[i].to_string() + " ; " + m[j].to_string() + ")");
    }
  return closed;
}

bool equals(const ClosedHypergraph& a, const ClosedHypergraph& b) {
  if (a.n() != b.n() || a.r() != b.r())
    throw usage_error("equals: closed hypergraphs have different (n, r)");
  return a.middles() == b.middles();
}

ClosedHypergraph intersection(const ClosedHypergraph& a, const ClosedHypergraph& b) {
  if (a.n() != b.n() || a.r() != b.r())
    throw usage_error("intersection: closed hypergraphs have different (n, r)");
  std::vector<VertexSet> common;
  std::set_intersection(a.middles().begin(), a.middles().end(), b.middles().begin(),
                        b.middles().end(), std::back_inserter(common));
  return normalize(Hypergraph(a.n(), std::move(common)), a.r());
}

HypergraphFile parse_hypergraph_file(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw parse_error("hypergraph: missing 'n' header");
  const std::size_t n = parse_count(line, line_no, "'n'");
  if (n > kMaxUniverse) throw parse_error("hypergraph: n=" + std::to_string(n) + " exceeds the compiled maximum");

  std::vector<VertexSet> sets;
  bool closed_format = false;
  std::size_t r = 0;
  bool first = true;
  while (next_content_line(in, line, line_no)) {
    if (first && line.size() >= 2 && line[0] == 'r' && (line[1] == ' ' || line[1] == '\t')) {
      closed_format = true;
      r = parse_count(line.substr(2), line_no, "'r <value>'");
      first = false;
      continue;
    }
    first = false;
    if (closed_format && line == "implicit cl-empty") continue;
    try {
      sets.push_back(VertexSet::parse(n, line));
    } catch (const usage_error& e) {
      throw parse_error("hypergraph line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!closed_format) {
    std::vector<VertexSet> sorted = sets;
    canonicalize(sorted);
    if (sorted.size() != sets.size()) throw parse_error("hypergraph: duplicate hyperedge");
    return Hypergraph(n, std::move(sets));
  }
  try {
    return ClosedHypergraph::assume_closed(n, r, std::move(sets));
  } catch (const usage_error& e) {
    throw parse_error(std::string("closed hypergraph: ") + e.what());
  }
}

HypergraphFile parse_hypergraph_file(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph_file(in);
}

ClosedHypergraph load_closed(const HypergraphFile& file, std::size_t r) {
  if (const auto* closed = std::get_if<ClosedHypergraph>(&file)) {
    if (closed->r() != r)
      throw usage_error("file declares r=" + std::to_string(closed->r()) + " but r=" +
                        std::to_string(r) + " was requested");
    return normalize(Hypergraph(closed->n(), closed->middles()), r);
  }
  return normalize(std::get<Hypergraph>(file), r);
}

}  // namespace rsplit
