#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rsplit/closure.hpp"
#include "rsplit/graph.hpp"
#include "rsplit/hypergraph.hpp"
#include "rsplit/oracle.hpp"
#include "rsplit/ortho.hpp"
#include "rsplit/splits.hpp"

namespace rsplit::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  unsigned threads = 1;
  std::string graph_file;
  std::string hyper_file;
  std::string out_file;
  std::string set_x;
  std::string set_a;
  std::string set_b;
  std::size_t r = 1;
  std::size_t n = 0;
  std::size_t k = 0;
  bool degenerate = false;
  bool oracle = false;
  std::uint64_t seed = 20230601;
  std::string profile = "quick";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) { return Graph::parse(read_file(path)); }

json sets_json(const std::vector<VertexSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(s.vertices());
  return arr;
}

json closed_json(const ClosedHypergraph& h) {
  return {{"n", h.n()}, {"r", h.r()}, {"middles", sets_json(h.middles())},
          {"middle_count", h.middle_count()}, {"total_count", h.total_count()}};
}

json hyper_json(const Hypergraph& h) {
  return {{"n", h.n()}, {"edges", sets_json(h.edges())}, {"edge_count", h.size()}};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw usage_error("cannot write '" + path + "'");
  f << text;
}

std::string closed_text(const ClosedHypergraph& h) {
  std::ostringstream ss;
  h.write(ss);
  return ss.str();
}

std::string hyper_text(const Hypergraph& h) {
  std::ostringstream ss;
  h.write(ss);
  return ss.str();
}

/// Closed families go to `-o` in file format; stdout gets the same text or
/// a JSON object.
void emit_closed(const ClosedHypergraph& h, const Options& o, std::ostream& out) {
  if (o.json && o.out_file.empty()) {
    out << closed_json(h).dump() << '\n';
    return;
  }
  emit(closed_text(h), o.out_file, out);
}

void emit_hyper(const Hypergraph& h, const Options& o, std::ostream& out) {
  if (o.json && o.out_file.empty()) {
    out << hyper_json(h).dump() << '\n';
    return;
  }
  emit(hyper_text(h), o.out_file, out);
}

int verdict(bool value, const Options& o, std::ostream& out, json extra = json::object()) {
  if (o.json) {
    extra["result"] = value;
    out << extra.dump() << '\n';
  } else {
    out << (value ? "true" : "false") << '\n';
  }
  return value ? kTrue : kFalse;
}

Hypergraph load_family(const std::string& path) {
  const auto file = parse_hypergraph_file(read_file(path));
  if (const auto* h = std::get_if<Hypergraph>(&file)) return *h;
  const auto& c = std::get<ClosedHypergraph>(file);
  return Hypergraph(c.n(), c.middles());
}

int cmd_rank(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_file);
  const VertexSet x = VertexSet::parse(g.n(), o.set_x);
  const std::size_t rank = cut_rank(g, x);
  if (o.json)
    out << json{{"rank", rank}, {"set", x.vertices()}}.dump() << '\n';
  else
    out << rank << '\n';
  return kTrue;
}

int cmd_splits(const Options& o, std::ostream& out) {
  emit_closed(enumerate_r_splits(load_graph(o.graph_file), o.r, o.threads), o, out);
  return kTrue;
}

int cmd_connected(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_file);
  const auto witness = find_nontrivial_small_split(g, o.r, o.threads);
  json extra = json::object();
  if (witness) extra["witness"] = witness->vertices();
  const int code = verdict(!witness, o, out, extra);
  if (witness && !o.json) out << "nontrivial cut " << witness->to_string() << '\n';
  return code;
}

int cmd_essential(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph_file);
  if (auto witness = find_nontrivial_small_split(g, o.r, o.threads)) {
    err << "rsplit: graph is not " << o.r << "-rank connected (nontrivial cut "
        << witness->to_string() << ")\n";
    return kFalse;
  }
  emit_hyper(essential_representation(enumerate_r_splits(g, o.r, o.threads)), o, out);
  return kTrue;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const Hypergraph h = load_family(o.hyper_file);
  emit_closed(o.degenerate ? close_degenerate(h, o.r) : close_full(h, o.r), o, out);
  return kTrue;
}

int cmd_member(const Options& o, std::ostream& out) {
  const auto closed = load_closed(parse_hypergraph_file(read_file(o.hyper_file)), o.r);
  const VertexSet x = VertexSet::parse(closed.n(), o.set_x);
  return verdict(closed.contains(x), o, out);
}

int cmd_ortho(const Options& o, std::ostream& out) {
  const VertexSet a = VertexSet::parse(o.n, o.set_a);
  const VertexSet b = VertexSet::parse(o.n, o.set_b);
  const bool value = o.oracle ? is_orthogonal_oracle(a, b, o.r) : is_orthogonal(a, b, o.r);
  return verdict(value, o, out);
}

int cmd_crossfree(const Options& o, std::ostream& out) {
  const auto res = check_cross_free(load_family(o.hyper_file), o.r);
  json extra = json::object();
  if (res.crossing)
    extra["crossing"] = {res.crossing->first.vertices(), res.crossing->second.vertices()};
  const int code = verdict(res.cross_free, o, out, extra);
  if (res.crossing && !o.json)
    out << "crossing " << res.crossing->first.to_string() << ' '
        << res.crossing->second.to_string() << '\n';
  return code;
}

int cmd_family(const Options& o, std::ostream& out) {
  const Hypergraph fam = build_family(FamilyParams(o.r, o.k));
  if (!o.out_file.empty() || o.json) {
    emit_hyper(fam, o, out);
  } else {
    // Bare edge lines on stdout; `-o` writes the full file format.
    for (const auto& e : fam.edges()) out << e.to_string() << '\n';
  }
  return kTrue;
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err) {
  CrossFreeBounds rep;
  try {
    rep = crossfree_size_bounds(load_family(o.hyper_file), o.r);
  } catch (const precondition_error& e) {
    err << "rsplit: " << e.what() << '\n';
    return kFalse;
  }
  if (o.json) {
    out << json{{"n", rep.n},
                {"r", rep.r},
                {"family_size", rep.family_size},
                {"nontrivial_edges", rep.nontrivial_edges},
                {"closure_middles", rep.closure_middles},
                {"twice_nontrivial", 2 * rep.nontrivial_edges},
                {"closure_total", rep.closure_total},
                {"total_bound", rep.total_bound},
                {"pass", rep.pass()}}
               .dump()
        << '\n';
  } else {
    out << "nontrivial " << rep.nontrivial_edges << " <= closure-middles " << rep.closure_middles
        << " <= twice " << 2 * rep.nontrivial_edges << '\n';
    out << "closure-total " << rep.closure_total << " <= bound " << rep.total_bound << '\n';
    out << (rep.pass() ? "PASS" : "FAIL") << '\n';
  }
  return rep.pass() ? kTrue : kFalse;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.graph_file.empty()) {
    TheoremOneReport rep;
    try {
      rep = verify_theorem_one(load_graph(o.graph_file), o.r, o.threads);
    } catch (const precondition_error& e) {
      err << "rsplit: " << e.what() << '\n';
      return kFalse;
    }
    if (o.json) {
      out << json{{"n", rep.n},
                  {"r", rep.r},
                  {"split_middles", rep.split_middles},
                  {"split_total", rep.split_total},
                  {"essential_count", rep.essential_count},
                  {"essential_bound", rep.essential_bound},
                  {"closure_matches", rep.closure_matches},
                  {"pass", rep.pass()}}
                 .dump()
          << '\n';
    } else {
      out << (rep.pass() ? "PASS" : "FAIL") << " essential-check n=" << rep.n << " r=" << rep.r
          << " splits=" << rep.split_total << " middles=" << rep.split_middles
          << " essential=" << rep.essential_count << " bound=" << rep.essential_bound
          << " closure-matches=" << (rep.closure_matches ? "yes" : "no") << '\n';
    }
    return rep.pass() ? kTrue : kFalse;
  }
  oracle::SuiteOptions so;
  so.seed = o.seed;
  so.profile = oracle::parse_profile(o.profile);
  const auto rep = oracle::run_verification_suite(so);
  if (o.json) {
    json props = json::array();
    for (const auto& p : rep.properties)
      props.push_back({{"tag", p.tag}, {"pass", p.passed}, {"trials", p.trials},
                       {"counterexample", p.counterexample}});
    out << json{{"seed", o.seed}, {"profile", o.profile}, {"properties", props},
                {"pass", rep.all_passed()}}
               .dump()
        << '\n';
  } else {
    out << rep.render();
  }
  return rep.all_passed() ? kTrue : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"r-split toolkit: cut-rank, r-split hypergraphs, closures and orthogonality"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print reports as a single JSON object");
  app.add_option("--threads", o.threads, "Worker threads for exhaustive scans")->check(CLI::PositiveNumber);

  auto* rank = app.add_subcommand("rank", "Print the cut-rank of a vertex set");
  rank->add_option("-g,--graph", o.graph_file, "Graph file")->required();
  rank->add_option("-X,--set", o.set_x, "Vertex set, e.g. 1,2,3 ('-' for empty)")->required();

  auto* splits = app.add_subcommand("splits", "Enumerate all r-splits (closed-hypergraph format)");
  splits->add_option("-g,--graph", o.graph_file)->required();
  splits->add_option("-r", o.r)->required();
  splits->add_option("-o,--output", o.out_file);

  auto* connected = app.add_subcommand("connected", "Exit 0 iff the graph is r-rank connected");
  connected->add_option("-g,--graph", o.graph_file)->required();
  connected->add_option("-r", o.r)->required();

  auto* essential = app.add_subcommand("essential", "Essential hyperedges of the r-split hypergraph");
  essential->add_option("-g,--graph", o.graph_file)->required();
  essential->add_option("-r", o.r)->required();
  essential->add_option("-o,--output", o.out_file);

  auto* closure = app.add_subcommand("closure", "Close a hypergraph (union rule unless --degenerate)");
  closure->add_option("-H,--hypergraph", o.hyper_file)->required();
  closure->add_option("-r", o.r)->required();
  closure->add_flag("--degenerate", o.degenerate, "Complement and small-set rules only");
  closure->add_option("-o,--output", o.out_file);

  auto* member = app.add_subcommand("member", "Exit 0 iff X belongs to the closed hypergraph");
  member->add_option("-H,--hypergraph", o.hyper_file)->required();
  member->add_option("-r", o.r)->required();
  member->add_option("-X,--set", o.set_x)->required();

  auto* ortho = app.add_subcommand("ortho", "Exit 0 iff A and B are r-orthogonal");
  ortho->add_option("-n", o.n)->required();
  ortho->add_option("-r", o.r)->required();
  ortho->add_option("-A", o.set_a)->required();
  ortho->add_option("-B", o.set_b)->required();
  ortho->add_flag("--oracle", o.oracle, "Compare closures instead of evaluating the formula");

  auto* crossfree = app.add_subcommand("crossfree", "Exit 0 iff the hypergraph is r-cross-free");
  crossfree->add_option("-H,--hypergraph", o.hyper_file)->required();
  crossfree->add_option("-r", o.r)->required();

  auto* family = app.add_subcommand(
      "family",
      "Lower-bound family on n = k(r+1) vertices; value v, colour c is vertex (c-1)*k + v + 1");
  family->add_option("-r", o.r)->required();
  family->add_option("-k", o.k)->required();
  family->add_option("-o,--output", o.out_file);

  auto* bounds = app.add_subcommand("bounds", "Size bounds for a cross-free hypergraph");
  bounds->add_option("-H,--hypergraph", o.hyper_file)->required();
  bounds->add_option("-r", o.r)->required();

  auto* verify = app.add_subcommand("verify", "Essential-representation check for a graph, or the property suite");
  verify->add_option("-g,--graph", o.graph_file);
  verify->add_option("-r", o.r);
  verify->add_option("--seed", o.seed);
  verify->add_option("--profile", o.profile)->check(CLI::IsMember({"quick", "full"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "rsplit: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*rank) return cmd_rank(o, out);
    if (*splits) return cmd_splits(o, out);
    if (*connected) return cmd_connected(o, out);
    if (*essential) return cmd_essential(o, out, err);
    if (*closure) return cmd_closure(o, out);
    if (*member) return cmd_member(o, out);
    if (*ortho) return cmd_ortho(o, out);
    if (*crossfree) return cmd_crossfree(o, out);
    if (*family) return cmd_family(o, out);
    if (*bounds) return cmd_bounds(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const std::exception& e) {
    err << "rsplit: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rsplit::cli
