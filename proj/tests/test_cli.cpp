#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cycloribbon/cli/app.hpp"

using cycloribbon::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cycloribbon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cycloribbon::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("enumerate", "[cli]") {
  const auto r = run({"enumerate", "--n", "3", "--r", "2", "--shape", "2,1"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["count"] == 5);
  std::vector<std::string> literals;
  for (const auto& x : j["ribbons"]) literals.push_back(x["literal"]);
  CHECK(literals == std::vector<std::string>{"2,1|1,1,1", "2,1|1,2,1", "2,1|1,2,2", "2,1|2,2,1", "2,1|2,2,2"});
  CHECK(json_of(run({"enumerate", "--n", "4", "--r", "3"}))["count"] == 3 * 4 * 4 * 4);
  CHECK(json_of(run({"enumerate", "--n", "3", "--r", "2", "--anti"}))["kind"] == "anticycloribbons");
  CHECK(run({"enumerate", "--n", "3", "--r", "0"}).code == 1);
  CHECK(run({"enumerate", "--n", "3", "--r", "2", "--shape", "2,2"}).code == 1);
}

TEST_CASE("phi", "[cli]") {
  const auto r = run({"phi", "--ribbon", "3,1,1,1,4|1,1,3,3,3,2,1,1,4,5"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["output"]["literal"] == "2,1,1,4,1,1|1,1,3,3,3,2,1,1,4,5");
  CHECK(j["input_kind"] == "cycloribbon");
  CHECK(j["output_kind"] == "anticycloribbon");
  const auto bad = run({"phi", "--ribbon", "1,2|1,1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("--ribbon") != std::string::npos);
  CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("products and coproducts", "[cli]") {
  const auto s = run({"product", "--basis", "S", "--lhs", "2^1", "--rhs", "1^2"});
  REQUIRE(s.code == 0);
  CHECK(json_of(s)["terms"].size() == 1);
  const auto rr = run({"product", "--basis", "R", "--lhs", "1^1", "--rhs", "1^1"});
  CHECK(json_of(rr)["terms"].size() == 2);
  const auto f = run({"product", "--basis", "F", "--lhs", "1,1|2,1", "--rhs", "2|1,2", "--r", "2"});
  CHECK(json_of(f)["terms"].size() == 6);
  CHECK(run({"product", "--basis", "F", "--lhs", "1|3", "--rhs", "1|1", "--r", "2"}).code == 1);
  CHECK(run({"product", "--basis", "F", "--lhs", "1|1", "--rhs", "1|2", "--color-inversion", "negate"}).code == 1);
  CHECK(run({"product", "--basis", "Q", "--lhs", "1|1", "--rhs", "1|2"}).code == 1);
  const auto c = run({"coproduct", "--basis", "F", "--elt", "1,1|2,1"});
  REQUIRE(c.code == 0);
  CHECK(json_of(c)["terms"].size() == 3);
  CHECK(json_of(run({"coproduct", "--basis", "S", "--elt", "2^1"}))["terms"].size() == 3);
}

TEST_CASE("induce-simples", "[cli]") {
  const auto r = run({"induce-simples", "--lhs", "1,1|2,1", "--rhs", "2|1,2"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["count"] == 6);
  CHECK(j["factors"][0]["literal"] == "1,3|2,1,1,2");
  CHECK(run({"induce-simples", "--lhs", "2|2,1", "--rhs", "1|1"}).code == 1);
  const auto negated = run({"induce-simples", "--lhs", "1|1", "--rhs", "1|2", "--r", "3", "--color-inversion", "negate"});
  CHECK(json_of(negated)["factors"][0]["literal"] == "2|1,3");
}

TEST_CASE("induce-hecke-projective and dims", "[cli]") {
  const auto r = run({"induce-hecke-projective", "--shape", "2,1", "--r", "2"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["count"] == 5);
  CHECK(j["total_dimension"] == 16);
  const auto d = run({"dims", "--n", "3", "--r", "2"});
  REQUIRE(d.code == 0);
  CHECK(json_of(d)["total"] == 48);
  CHECK(json_of(d)["expected_total"] == 48);
}

TEST_CASE("matrices", "[cli]") {
  const auto c = run({"cartan", "--n", "1", "--r", "3"});
  REQUIRE(c.code == 0);
  CHECK(c.out == ",1|1,1|2,1|3\n1^1,1,0,0\n1^2,0,1,0\n1^3,0,0,1\n");
  const auto j = run({"cartan", "--n", "2", "--r", "2", "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(json_of(j)["rows"].size() == 6);
  const auto d = run({"decomp", "--n", "2", "--r", "1", "--format", "json"});
  CHECK(json_of(d)["entries"] == Json::parse("[[0,1],[1,0]]"));
  CHECK(run({"cartan", "--n", "1", "--r", "3", "--format", "xml"}).code == 1);
}

TEST_CASE("oracle subcommands", "[cli]") {
  const auto v = run({"oracle", "verify", "--n", "2", "--r", "2", "--u", "1,3"});
  REQUIRE(v.code == 0);
  CHECK(json_of(v)["pass"] == true);
  CHECK(json_of(v)["reports"][0]["instance"] == "n=2,r=2,u=1,3");
  CHECK(run({"oracle", "verify", "--n", "2", "--r", "2", "--u", "1,1"}).code == 1);
  CHECK(run({"oracle", "verify", "--n", "2", "--r", "2", "--u", "1,x"}).code == 1);
  CHECK(run({"oracle", "verify", "--n", "7", "--r", "2"}).code == 1);
  const auto x = run({"oracle", "cross-check", "--max-grade", "2", "--r", "3"});
  CHECK(x.code == 0);
  const auto neg = run({"oracle", "cross-check", "--max-grade", "2", "--r", "3", "--color-inversion", "negate"});
  CHECK(neg.code == 2);
  CHECK(json_of(neg)["pass"] == false);
  const auto failure = Json::parse(neg.err);
  CHECK(failure["check"] == "induction_factors (2 pairs)");
  CHECK(failure["counterexample"]["rhs"] == "1|2");
}

TEST_CASE("usage errors and help", "[cli]") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"enumerate", "--n", "3"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"cartan", "--help"}).code == 0);
}

TEST_CASE("output is deterministic", "[cli]") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "--n", "4", "--r", "2"},
           {"product", "--basis", "R", "--lhs", "2^1.1^2", "--rhs", "1^2.3^1"},
           {"coproduct", "--basis", "R", "--elt", "2^1.1^2 + 1/2*3^1"},
           {"decomp", "--n", "3", "--r", "2", "--format", "json"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

#ifdef CYCLORIBBON_CLI_PATH
TEST_CASE("the executable reports exit codes", "[cli]") {
  const std::string cli = CYCLORIBBON_CLI_PATH;
  CHECK(std::system((cli + " cartan --n 1 --r 2 > /dev/null").c_str()) == 0);
  CHECK(WEXITSTATUS(std::system((cli + " phi --ribbon 1,2 > /dev/null 2>&1").c_str())) == 1);
  CHECK(WEXITSTATUS(std::system(
            (cli + " oracle cross-check --max-grade 2 --r 3 --color-inversion negate > /dev/null 2>&1").c_str())) == 2);
}
#endif
