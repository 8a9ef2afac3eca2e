#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rsplit/hypergraph.hpp"
#include "rsplit/ortho.hpp"

namespace fs = std::filesystem;
using namespace rsplit;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(RSPLIT_TEST_DATA) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "rsplit_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rank") {
  const auto r = run({"rank", "-g", data("nine_vertex.graph"), "-X", "1,2,3,4,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("ortho exit codes") {
  CHECK(run({"ortho", "-n", "12", "-r", "3", "-A", "1,2,3", "-B", "2,3,4,5,6"}).code == 0);
  CHECK(run({"ortho", "-n", "12", "-r", "3", "-A", "1,2,3", "-B", "2,3,4,5,6", "--oracle"}).code == 0);
  CHECK(run({"ortho", "-n", "6", "-r", "1", "-A", "1,2,3", "-B", "3,4,5"}).code == 1);
  CHECK(run({"ortho", "-n", "6", "-r", "1", "-A", "1,2,3", "-B", "3,4,5", "--oracle"}).code == 1);
  CHECK(run({"ortho", "-n", "6", "-r", "1", "-A", "1,9", "-B", "3"}).code == 2);
}

TEST_CASE("family output") {
  const auto r = run({"family", "-r", "2", "-k", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  CHECK(first == "1,4,7");
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);

  const auto path = scratch("family.hg").string();
  CHECK(run({"family", "-r", "2", "-k", "3", "-o", path}).code == 0);
  const auto parsed = parse_hypergraph_file(slurp(path));
  REQUIRE(std::holds_alternative<Hypergraph>(parsed));
  CHECK(std::get<Hypergraph>(parsed) == build_family(FamilyParams(2, 3)));
}

TEST_CASE("splits and essential round trip") {
  const auto c4 = write_scratch("c4.graph", "4 4\n1 2\n2 3\n3 4\n1 4\n");
  const auto splits = scratch("c4.splits").string();
  CHECK(run({"splits", "-g", c4, "-r", "1", "-o", splits}).code == 0);
  const auto parsed = parse_hypergraph_file(slurp(splits));
  REQUIRE(std::holds_alternative<ClosedHypergraph>(parsed));
  CHECK(std::get<ClosedHypergraph>(parsed).middle_count() == 2);

  const auto ess = scratch("c4.ess").string();
  CHECK(run({"essential", "-g", c4, "-r", "1", "-o", ess}).code == 0);
  const auto closed = scratch("c4.closed").string();
  CHECK(run({"closure", "-H", ess, "-r", "1", "-o", closed}).code == 0);
  CHECK(slurp(closed) == slurp(splits));

  CHECK(run({"member", "-H", splits, "-r", "1", "-X", "1,3"}).code == 0);
  CHECK(run({"member", "-H", splits, "-r", "1", "-X", "1,2"}).code == 1);
  CHECK(run({"member", "-H", splits, "-r", "1", "-X", "1"}).code == 0);
  CHECK(run({"member", "-H", splits, "-r", "2", "-X", "1"}).code == 2);
}

TEST_CASE("connected and essential refusal") {
  const auto k33 = write_scratch(
      "k33.graph", "6 9\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n");
  CHECK(run({"connected", "-g", k33, "-r", "1"}).code == 0);
  const auto r = run({"connected", "-g", k33, "-r", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("nontrivial cut") != std::string::npos);
  const auto e = run({"essential", "-g", k33, "-r", "2"});
  CHECK(e.code == 1);
  CHECK(e.err.find("not 2-rank connected") != std::string::npos);
}

TEST_CASE("closure modes") {
  const auto in = write_scratch("two.hg", "8\n1,2,3\n2,3,4,5\n");
  const auto full = run({"closure", "-H", in, "-r", "2"});
  const auto deg = run({"closure", "-H", in, "-r", "2", "--degenerate"});
  CHECK(full.code == 0);
  CHECK(deg.code == 0);
  CHECK(std::get<ClosedHypergraph>(parse_hypergraph_file(full.out)).middle_count() == 6);
  CHECK(std::get<ClosedHypergraph>(parse_hypergraph_file(deg.out)).middle_count() == 4);
  const auto j = run({"--json", "closure", "-H", in, "-r", "2"});
  CHECK(j.out.find("\"middle_count\":6") != std::string::npos);
}

TEST_CASE("crossfree and bounds") {
  const auto fam = scratch("f23.hg").string();
  run({"family", "-r", "2", "-k", "3", "-o", fam});
  CHECK(run({"crossfree", "-H", fam, "-r", "2"}).code == 0);
  const auto b = run({"bounds", "-H", fam, "-r", "2"});
  CHECK(b.code == 0);
  CHECK(b.out.find("nontrivial 9 <= closure-middles 18 <= twice 18") != std::string::npos);

  const auto crossing = write_scratch("cross.hg", "6\n1,2,3\n3,4,5\n");
  const auto c = run({"crossfree", "-H", crossing, "-r", "1"});
  CHECK(c.code == 1);
  CHECK(c.out.find("crossing 1,2,3 3,4,5") != std::string::npos);
  CHECK(run({"bounds", "-H", crossing, "-r", "1"}).code == 1);
}

TEST_CASE("verify") {
  const auto c5 = write_scratch("c5.graph", "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
  const auto v = run({"verify", "-g", c5, "-r", "1"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS essential-check", 0) == 0);
  const auto j = run({"--json", "verify", "-g", c5, "-r", "1"});
  CHECK(j.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"rank", "-g", data("nine_vertex.graph")}).code == 2);
  CHECK(run({"rank", "-g", "/nonexistent/file", "-X", "1"}).code == 2);
  CHECK(run({"family", "-r", "0", "-k", "3"}).code == 2);
  CHECK(run({"verify", "--profile", "slow"}).code == 2);
  const auto bad = write_scratch("bad.graph", "3 1\n1 1\n");
  CHECK(run({"rank", "-g", bad, "-X", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
