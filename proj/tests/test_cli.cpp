#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cgybe/cli.hpp"
#include "cgybe/serialize.hpp"

using namespace cgybe;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(Json::parse(line));
  return lines;
}

}  // namespace

TEST_CASE("gen") {
  const Run a = run({"gen", "--op", "cg", "--n", "3", "--params", "hecke"});
  CHECK(a.code == kExitOk);
  const Run b = run({"gen", "--op", "cg", "--n", "3", "--params", "hecke", "--format", "json"});
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j.at("n") == 3);
  CHECK(j.at("arity") == 2);

  CHECK(run({"gen", "--op", "perm", "--n", "2", "--format", "latex"}).out.starts_with("\\begin{array}{c|cccc}"));
  CHECK(run({"gen", "--op", "g", "--n", "2", "--format", "csv"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--n", "3", "--checks", "ybe,hecke,compat"});
  CHECK(ok.code == kExitOk);
  const auto lines = json_lines(ok.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].at("name") == "compat");
  CHECK(lines[1].at("name") == "hecke");
  CHECK(lines[2].at("name") == "ybe");
  for (const auto& l : lines) CHECK(l.at("passed") == true);

  const Run bad = run({"verify", "--n", "2", "--alpha", "q", "--beta", "1", "--checks", "hecke"});
  CHECK(bad.code == kExitCheckFailed);
  const auto report = json_lines(bad.out).at(0);
  CHECK(report.at("passed") == false);
  CHECK(report.at("witness").at("input") == Json::array({1, 2}));

  CHECK(run({"verify", "--n", "2", "--op", "g", "--checks", "ybe,gp,mixed"}).code == kExitOk);
  CHECK(run({"verify", "--n", "2", "--checks", "nope"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "2", "--hecke-q", "q+1", "--checks", "hecke"}).code == kExitUsage);
}

TEST_CASE("identities") {
  const Run r = run({"identities", "--lo", "-1", "--hi", "2", "--only", "ids5"});
  CHECK(r.code == kExitOk);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].at("name") == "ids5");
  CHECK(lines[0].at("window") == Json::parse(R"({"lo":-1,"hi":2,"arity":2})"));
  CHECK(lines[0].at("counterexample").is_null());

  CHECK(json_lines(run({"identities", "--lo", "0", "--hi", "1"}).out).size() == 17);
  CHECK(run({"identities", "--lo", "3", "--hi", "1"}).code == kExitUsage);
  CHECK(run({"identities", "--only", "bogus"}).code == kExitUsage);
}

TEST_CASE("eval") {
  const Run r = run({"eval", "--op", "cg2", "--n", "2", "--q", "1", "--p", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1,0,0,0\n0,0,1,0\n0,1,0,0\n0,0,0,1\n");

  const Run checked = run({"eval", "--op", "cg2", "--n", "3", "--q", "2/3", "--p", "-5", "--check-ybe"});
  CHECK(checked.code == kExitOk);
  CHECK(json_lines(checked.err).at(0).at("name") == "ybe_numeric");

  const Run scaled = run({"eval", "--op", "cg", "--n", "2", "--alpha", "1", "--beta", "q", "--q", "2", "--p", "1",
                           "--check-ybe"});
  CHECK(scaled.code == kExitOk);

  CHECK(Json::parse(run({"eval", "--n", "2", "--q", "2", "--p", "1", "--format", "json"}).out).at("q") == "2");
  CHECK(run({"eval", "--n", "2", "--q", "0", "--p", "1"}).code == kExitUsage);
  CHECK(run({"eval", "--n", "2", "--q", "x", "--p", "1"}).code == kExitUsage);
  CHECK(run({"eval", "--n", "2", "--q", "1"}).code == kExitUsage);
}

TEST_CASE("--out writes to a file") {
  const std::string path = "test_cli_out.json";
  const Run r = run({"gen", "--op", "perm", "--n", "2", "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == run({"gen", "--op", "perm", "--n", "2"}).out);
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"gen"}).code == kExitUsage);
  CHECK(run({"gen", "--n", "0"}).code == kExitUsage);
  CHECK(run({"gen", "--n", "2", "--alpha", "q^"}).code == kExitUsage);
  CHECK(run({"gen", "--n", "two"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
