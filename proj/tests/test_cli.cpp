#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "phinary/cli.hpp"

using namespace phinary;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return RunResult{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("convert subcommand") {
  CHECK(run({"convert", "3φ+2"}).out == "10000\n");
  CHECK(run({"convert", "3phi+2"}).out == "10000\n");
  CHECK(run({"convert", "--from-basephi", "10000"}).out == "3φ+2\n");
  CHECK(run({"convert", "--natural", "5"}).out == "1000.1001\n");
  CHECK(run({"convert", "--to-rank", "21φ+13"}).out == "55\n");
  CHECK(run({"convert", "--from-rank", "55"}).out == "21φ+13\n");
  auto both = run({"convert", "--to-rank", "--from-rank", "5"});
  CHECK(both.code == 2);
  CHECK(both.err.find("ParseError:") == 0);
  // 2φ-1 = sqrt5 has a fractional expansion; encoding works, ranking does not.
  CHECK(run({"convert", "2φ-1"}).out == "10.1\n");
  auto bad = run({"convert", "--to-rank", "2φ-1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotPhinary:") == 0);
}

TEST_CASE("succ subcommand") {
  CHECK(run({"succ", "φ"}).out == "φ+1\n");
  CHECK(run({"succ", "0", "-n", "3"}).out == "φ+1\n");
  CHECK(run({"succ", "phi+1", "-n", "-2"}).out == "1\n");
  CHECK(run({"succ", "0", "--count", "-1"}).out == "-1\n");
}

TEST_CASE("rank subcommand") {
  CHECK(run({"rank", "2φ+2"}).out == "6\n");
  CHECK(run({"rank", "--inverse", "6"}).out == "2φ+2\n");
  CHECK(run({"rank", "--inverse", "-3"}).out == "-φ-1\n");
}

TEST_CASE("op subcommand") {
  CHECK(run({"op", "dagger", "2φ+2", "φ+2"}).out == "4φ+2\n");
  CHECK(run({"op", "hook", "φ+2", "2φ+2"}).out == "-φ\n");
  CHECK(run({"op", "star", "φ", "φ"}).out == "φ+2\n");
  CHECK(run({"op", "succ0", "0", "φ"}).out == "φ+1\n");
  CHECK(run({"op", "dagger", "--recursive", "φ", "1"}).out ==
        run({"op", "dagger", "φ", "1"}).out);
  auto div = run({"op", "stripe", "φ", "0"});
  CHECK(div.code == 1);
  CHECK(div.err.find("DivisionByZero:") == 0);
  auto unknown = run({"op", "frob", "1", "1"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("ParseError:") == 0);
}

TEST_CASE("parity subcommand") {
  CHECK(run({"parity", "2φ+2"}).out == "odd q=φ\n");
  CHECK(run({"parity", "3φ+1"}).out == "curious q=1\n");
  CHECK(run({"parity", "0"}).out == "even q=0\n");
}

TEST_CASE("seq subcommand") {
  auto d = run({"seq", "diatomic", "--phinary", "--count", "9"});
  CHECK(d.code == 0);
  CHECK(d.out ==
        "0 1\n"
        "1 1\n"
        "10 1\n"
        "100 2\n"
        "101 1\n"
        "1000 2\n"
        "1001 2\n"
        "1010 1\n"
        "10000 3\n");
  CHECK(run({"seq", "hyperbinary", "--count", "9"}).out ==
        "1\n1\n2\n1\n3\n2\n3\n1\n4\n");
  // The oracle route must print the same terms.
  CHECK(run({"seq", "diatomic", "--oracle", "--count", "12"}).out ==
        run({"seq", "diatomic", "--count", "12"}).out);
  CHECK(run({"seq", "hyperphinary", "--oracle", "--count", "12"}).out ==
        run({"seq", "hyperphinary", "--count", "12"}).out);
  CHECK(run({"seq", "hyperbinary", "--phinary"}).code == 2);
  CHECK(run({"seq", "primes"}).code == 2);
}

TEST_CASE("tree subcommand") {
  CHECK(run({"tree", "cw", "--row", "2"}).out == "3/1 2/3 3/2 1/3\n");
  CHECK(run({"tree", "pert", "--row", "2"}).out == "1/1 2/1 2/0\n");
  CHECK(run({"tree", "sb", "--depth", "1"}).out == "1/1\n1/2 2/1\n");
  auto dot = run({"tree", "prt", "--depth", "2", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph prt") != std::string::npos);
  auto deep = run({"tree", "cw", "--row", "99"});
  CHECK(deep.code == 1);
  CHECK(deep.err.find("DepthLimit:") == 0);
  CHECK(run({"tree", "cw"}).code == 2);
  CHECK(run({"tree", "cw", "--row", "1", "--depth", "1"}).code == 2);
  CHECK(run({"tree", "xyz", "--row", "1"}).code == 2);
}

TEST_CASE("depth limit environment override") {
  setenv("PHINARY_DEPTH_LIMIT", "3", 1);
  auto blocked = run({"tree", "cw", "--row", "5"});
  CHECK(blocked.code == 1);
  CHECK(blocked.err.find("DepthLimit:") == 0);
  CHECK(run({"tree", "cw", "--row", "3"}).code == 0);
  auto render_blocked = run({"render", "gd", "--depth", "5"});
  CHECK(render_blocked.code == 1);
  CHECK(render_blocked.err.find("DepthLimit:") == 0);
  setenv("PHINARY_DEPTH_LIMIT", "18", 1);
  CHECK(run({"tree", "cw", "--row", "17"}).code == 0);
  setenv("PHINARY_DEPTH_LIMIT", "abc", 1);
  auto bad = run({"tree", "cw", "--row", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ParseError:") == 0);
  unsetenv("PHINARY_DEPTH_LIMIT");
  CHECK(run({"tree", "cw", "--row", "5"}).code == 0);
}

TEST_CASE("cardinality subcommand") {
  auto r = run({"cardinality"});
  CHECK(r.code == 0);
  CHECK(r.out == "x=2^x-1: {0,1}; x=F(x+3)-2: {0,1}\n");
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "phinary-table", "codec"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS phinary-table (") == 0);
  CHECK(r.out.find("PASS codec (") != std::string::npos);
  CHECK(r.out.find("ok 2/2\n") != std::string::npos);

  auto bogus = run({"verify", "bogus"});
  CHECK(bogus.code == 1);
  CHECK(bogus.err.find("DomainError:") == 0);

  auto js = run({"verify", "--json", "cardinality"});
  CHECK(js.code == 0);
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["passed"] == 1);
  CHECK(doc["failed"] == 0);
  REQUIRE(doc["suites"].size() == 1);
  CHECK(doc["suites"][0]["name"] == "cardinality");
  CHECK(doc["suites"][0]["pass"] == true);
}

TEST_CASE("render subcommand") {
  auto a = run({"render", "gd", "--depth", "2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("<svg") == 0);
  CHECK(a.out == run({"render", "gd", "--depth", "2"}).out);

  std::string path = "/tmp/phinary_cli_render_test.svg";
  auto to_file = run({"render", "gd", "--depth", "2", "--out", path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.out);
  std::remove(path.c_str());

  CHECK(run({"render", "gd", "--depth", "0"}).code == 1);
  CHECK(run({"render", "void", "--depth", "3"}).code == 1);
  auto rays = run({"render", "projection", "--depth", "3"});
  auto no_rays = run({"render", "projection", "--depth", "3",
                      "--no-perspective"});
  CHECK(rays.code == 0);
  CHECK(no_rays.code == 0);
  CHECK(rays.out != no_rays.out);
}

TEST_CASE("usage and help") {
  CHECK(run({}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("convert") != std::string::npos);
  CHECK(run({"succ"}).code == 2);
  auto flag = run({"convert", "5", "--bogus-flag"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("usage error:") == 0);
}
