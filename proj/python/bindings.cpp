#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rsplit/closure.hpp"
#include "rsplit/gf2.hpp"
#include "rsplit/graph.hpp"
#include "rsplit/oracle.hpp"
#include "rsplit/ortho.hpp"
#include "rsplit/splits.hpp"

namespace py = pybind11;
using namespace rsplit;

namespace {

// Sets cross the boundary as lists of 1-based vertex labels.
using Vertices = std::vector<int>;
using Edges = std::vector<Vertices>;

VertexSet to_set(std::size_t n, const Vertices& v) { return VertexSet::from_vertices(n, v); }

Edges to_lists(const std::vector<VertexSet>& sets) {
  Edges out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.vertices());
  return out;
}

Hypergraph to_hypergraph(std::size_t n, const Edges& edges) {
  Hypergraph h(n);
  for (const auto& e : edges) h.insert(to_set(n, e));
  return h;
}

template <class T>
std::string text_of(const T& obj) {
  std::ostringstream out;
  obj.write(out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_rsplit, m) {
  m.doc() = "Cut-rank, r-split hypergraphs, closures and r-orthogonality";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<too_large_error>(m, "TooLargeError", PyExc_RuntimeError);
  py::register_exception<not_closed_error>(m, "NotClosedError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
           py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("parse", py::overload_cast<const std::string&>(&Graph::parse), py::arg("text"))
      .def_property_readonly("n", &Graph::n)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("to_text", &text_of<Graph>)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<ClosedHypergraph>(m, "ClosedHypergraph")
      .def_static(
          "trivial", &ClosedHypergraph::trivial, py::arg("n"), py::arg("r"))
      .def_property_readonly("n", &ClosedHypergraph::n)
      .def_property_readonly("r", &ClosedHypergraph::r)
      .def_property_readonly("middles",
                             [](const ClosedHypergraph& h) { return to_lists(h.middles()); })
      .def("contains",
           [](const ClosedHypergraph& h, const Vertices& a) { return h.contains(to_set(h.n(), a)); })
      .def("__contains__",
           [](const ClosedHypergraph& h, const Vertices& a) { return h.contains(to_set(h.n(), a)); })
      .def_property_readonly("total_count", &ClosedHypergraph::total_count)
      .def("to_text", &text_of<ClosedHypergraph>)
      .def("__eq__", [](const ClosedHypergraph& a, const ClosedHypergraph& b) { return a == b; })
      .def("__len__", &ClosedHypergraph::middle_count)
      .def("__repr__", [](const ClosedHypergraph& h) {
        return "<ClosedHypergraph n=" + std::to_string(h.n()) + " r=" + std::to_string(h.r()) +
               " middles=" + std::to_string(h.middle_count()) + ">";
      });

  m.def("normalize", [](std::size_t n, const Edges& e, std::size_t r) {
    return normalize(to_hypergraph(n, e), r);
  }, py::arg("n"), py::arg("edges"), py::arg("r"));

  m.def("gf2_rank", [](const std::vector<std::string>& rows) {
    return gf2_rank(Gf2Matrix::from_strings(rows));
  }, py::arg("rows"), "Rank over GF(2) of a matrix given as 0/1 strings.");

  m.def("cut_rank", [](const Graph& g, const Vertices& x) { return cut_rank(g, to_set(g.n(), x)); },
        py::arg("graph"), py::arg("x"));
  m.def("is_r_split", [](const Graph& g, const Vertices& x, std::size_t r) {
    return is_r_split(g, to_set(g.n(), x), r);
  }, py::arg("graph"), py::arg("x"), py::arg("r"));
  m.def("is_r_rank_connected", &is_r_rank_connected, py::arg("graph"), py::arg("r"),
        py::arg("threads") = 1u);

  m.def("enumerate_r_splits", &enumerate_r_splits, py::arg("graph"), py::arg("r"),
        py::arg("threads") = 1u);
  m.def("phi", [](const ClosedHypergraph& h, const Vertices& x) -> std::optional<Vertices> {
    const auto a = phi(h, to_set(h.n(), x));
    if (!a) return std::nullopt;
    return a->vertices();
  }, py::arg("h"), py::arg("x"));
  m.def("essential_representation", [](const ClosedHypergraph& h) {
    return to_lists(essential_representation(h).edges());
  }, py::arg("h"));
  m.def("verify_theorem_one", [](const Graph& g, std::size_t r, unsigned threads) {
    const auto rep = verify_theorem_one(g, r, threads);
    py::dict d;
    d["n"] = rep.n;
    d["r"] = rep.r;
    d["split_middles"] = rep.split_middles;
    d["split_total"] = rep.split_total;
    d["essential_count"] = rep.essential_count;
    d["essential_bound"] = rep.essential_bound;
    d["closure_matches"] = rep.closure_matches;
    d["pass"] = rep.pass();
    return d;
  }, py::arg("graph"), py::arg("r"), py::arg("threads") = 1u);

  m.def("close_full", [](std::size_t n, const Edges& e, std::size_t r) {
    return close_full(to_hypergraph(n, e), r);
  }, py::arg("n"), py::arg("edges"), py::arg("r"));
  m.def("close_degenerate", [](std::size_t n, const Edges& e, std::size_t r) {
    return close_degenerate(to_hypergraph(n, e), r);
  }, py::arg("n"), py::arg("edges"), py::arg("r"));

  m.def("is_orthogonal", [](std::size_t n, const Vertices& a, const Vertices& b, std::size_t r) {
    return is_orthogonal(to_set(n, a), to_set(n, b), r);
  }, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("is_orthogonal_oracle", [](std::size_t n, const Vertices& a, const Vertices& b, std::size_t r) {
    return is_orthogonal_oracle(to_set(n, a), to_set(n, b), r);
  }, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("crossing_pair", [](std::size_t n, const Edges& e, std::size_t r)
            -> std::optional<std::pair<Vertices, Vertices>> {
    const auto res = check_cross_free(to_hypergraph(n, e), r);
    if (!res.crossing) return std::nullopt;
    return std::pair{res.crossing->first.vertices(), res.crossing->second.vertices()};
  }, py::arg("n"), py::arg("edges"), py::arg("r"), "First crossing pair, or None if r-cross-free.");
  m.def("is_cross_free", [](std::size_t n, const Edges& e, std::size_t r) {
    return is_cross_free(to_hypergraph(n, e), r);
  }, py::arg("n"), py::arg("edges"), py::arg("r"));
  m.def("crossfree_size_bounds", [](std::size_t n, const Edges& e, std::size_t r) {
    const auto b = crossfree_size_bounds(to_hypergraph(n, e), r);
    py::dict d;
    d["n"] = b.n;
    d["r"] = b.r;
    d["family_size"] = b.family_size;
    d["nontrivial_edges"] = b.nontrivial_edges;
    d["closure_middles"] = b.closure_middles;
    d["closure_total"] = b.closure_total;
    d["total_bound"] = b.total_bound;
    d["pass"] = b.pass();
    return d;
  }, py::arg("n"), py::arg("edges"), py::arg("r"));
  m.def("build_family", [](std::size_t r, std::size_t k) {
    return to_lists(build_family(FamilyParams(r, k)).edges());
  }, py::arg("r"), py::arg("k"), "Edges of the lower-bound family on n = k(r+1) vertices.");
  m.def("verify_lower_bound", [](std::size_t r, std::size_t k) {
    const auto rep = verify_lower_bound(FamilyParams(r, k));
    py::dict d;
    d["n"] = rep.n;
    d["family_size"] = rep.family_size;
    d["essential_count"] = rep.essential_count;
    d["closure_middles"] = rep.closure_middles;
    d["pass"] = rep.pass();
    return d;
  }, py::arg("r"), py::arg("k"));

  m.def("run_verification_suite", [](std::uint64_t seed, const std::string& profile) {
    oracle::SuiteOptions opts;
    opts.seed = seed;
    opts.profile = oracle::parse_profile(profile);
    py::gil_scoped_release release;
    return oracle::run_verification_suite(opts).render();
  }, py::arg("seed") = std::uint64_t{20230601}, py::arg("profile") = "quick",
        "Report text, one `PASS|FAIL <tag> trials=N` line per property.");
}
