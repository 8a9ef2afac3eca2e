#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "rsplit/vertex_set.hpp"

namespace rsplit {

/// Explicit family of distinct hyperedges over [n], kept in canonical order.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n) : n_(n) {}
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }

  bool contains(const VertexSet& a) const;
  /// Returns false when `a` was already present.
  bool insert(const VertexSet& a);

  bool operator==(const Hypergraph&) const = default;

  /// `#` comments, header `n`, then one hyperedge per line (`-` for the
  /// empty set).
  static Hypergraph parse(std::istream& in);
  static Hypergraph parse(const std::string& text);
  void write(std::ostream& out) const;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
};

/// Canonical form of a family that is (claimed to be) r-closed.
///
/// Only the middle hyperedges (r < |A| < n - r) are stored. Every set with
/// |A| <= r or |A| >= n - r is an implicit member; together those sets are the
/// closure of the empty family. The middle list is sorted canonically and
/// closed under complement.
class ClosedHypergraph {
 public:
  ClosedHypergraph() = default;

  /// Closure of the empty family: no middles.
  static ClosedHypergraph trivial(std::size_t n, std::size_t r);

  /// Wraps an explicit middle list. Checks the size window and complement
  /// closure, but not the union rule; use normalize() for a full check.
  static ClosedHypergraph assume_closed(std::size_t n, std::size_t r,
                                        std::vector<VertexSet> middles);

  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return r_; }
  const std::vector<VertexSet>& middles() const noexcept { return middles_; }
  std::size_t middle_count() const noexcept { return middles_.size(); }

  bool is_implicit(const VertexSet& a) const noexcept;
  bool is_middle_size(std::size_t size) const noexcept {
    return size > r_ && size + r_ < n_;
  }
  bool contains(const VertexSet& a) const;

  /// Number of implicit members, sum over sizes outside the middle window.
  std::uint64_t implicit_count() const;
  std::uint64_t total_count() const { return implicit_count() + middles_.size(); }

  /// Every member, implicit ones included. Bounded by the exhaustive cap.
  Hypergraph materialize() const;

  bool operator==(const ClosedHypergraph&) const = default;

  /// Header `n`, then `r <value>`, the middles one per line and a trailing
  /// `implicit cl-empty` marker (ignored when parsing).
  void write(std::ostream& out) const;

 private:
  ClosedHypergraph(std::size_t n, std::size_t r, std::vector<VertexSet> middles)
      : n_(n), r_(r), middles_(std::move(middles)) {}

  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<VertexSet> middles_;
};

/// Strips implicit members and verifies complement closure, then the union
/// rule over all middle pairs. Throws not_closed_error naming the first
/// violation.
ClosedHypergraph normalize(const Hypergraph& h, std::size_t r);

/// Identical middle sets; throws usage_error when (n, r) differ.
bool equals(const ClosedHypergraph& a, const ClosedHypergraph& b);

/// Member-wise intersection, returned through normalize().
ClosedHypergraph intersection(const ClosedHypergraph& a, const ClosedHypergraph& b);

/// Contents of a hypergraph file: plain families or closed families (the
/// latter carry an `r` header line).
using HypergraphFile = std::variant<Hypergraph, ClosedHypergraph>;

HypergraphFile parse_hypergraph_file(std::istream& in);
HypergraphFile parse_hypergraph_file(const std::string& text);

/// Reads either format and returns a normalized closed family at rank r.
/// A closed file whose `r` header differs from `r` is a usage error.
ClosedHypergraph load_closed(const HypergraphFile& file, std::size_t r);

}  // namespace rsplit
