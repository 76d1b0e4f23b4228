#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cobord/cli/cli.hpp"

using namespace cobord;
using nlohmann::json;

namespace {

const std::string root = COBORD_SOURCE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("genus command") {
  auto r = call({"genus", "--phi", "todd", "--cpn", "6", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["result"]["values"].size() == 6);
  for (const auto& v : j["result"]["values"]) CHECK(v["value"] == "1");
  CHECK(j["config"]["cpn"] == 6);

  auto a = json::parse(call({"genus", "--phi", "a_hat", "--cpn", "2", "--json", "--check-chern"}).out);
  CHECK(a["result"]["values"][1]["value"] == "-1/8");
  CHECK(a["result"]["values"][1]["agree"] == true);

  auto s = json::parse(call({"genus", "--series", "1", "--cpn", "3", "--json"}).out);
  for (const auto& v : s["result"]["values"]) CHECK(v["value"] == "0");

  auto csv = call({"genus", "--phi", "l_genus", "--cpn", "4", "--format", "csv"});
  CHECK(csv.out == "n,value\n1,0\n2,1\n3,0\n4,1\n");
}

TEST_CASE("fgl commands") {
  auto v = call({"fgl", "validate", "--fgl", "multiplicative", "--json"});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["result"]["valid"] == true);

  auto bad = call({"fgl", "validate", "--input", root + "/tests/data/bad_unit.json", "--json"});
  CHECK(bad.code == 1);
  auto bj = json::parse(bad.out);
  CHECK(bj["result"]["axiom"] == "unit");
  CHECK(bj["status"] == "identity-failure");

  auto log = json::parse(call({"fgl", "log", "--fgl", "mult-laurent-q", "--order", "4", "--json"}).out);
  CHECK(log["result"]["log"] == "x + 1/2*u*x^2 + 1/3*u^2*x^3 + 1/4*u^3*x^4");
  CHECK(call({"fgl", "log", "--fgl", "multiplicative"}).code == 2);

  auto c = call({"fgl", "classify", "--genus", "todd", "--order", "8", "--json"});
  CHECK(c.code == 0);
  auto cj = json::parse(c.out);
  CHECK(cj["result"]["matches"] == true);
  CHECK(cj["result"]["image"]["series"] == "x + y - x*y");
}

TEST_CASE("landweber command") {
  auto r = call({"landweber", "--fgl", "additive", "--primes", "2", "--stages", "1", "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["result"]["verdicts"][0]["verdict"] == "fails-at-stage-1");
  auto m = json::parse(call({"landweber", "--fgl", "mult-laurent", "--primes", "2,3,5", "--stages", "2", "--json"}).out);
  for (const auto& v : m["result"]["verdicts"]) CHECK(v["verdict"] == "exact-through-stage-2");
}

TEST_CASE("tor1 command") {
  auto r = call({"tor1", "--module", root + "/configs/tor1/q_over_qx.json", "--map", root + "/configs/tor1/augmentation.json",
                 "--lo", "-4", "--hi", "0", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "degree,dim\n0,0\n-1,0\n-2,1\n-3,0\n-4,0\n");
  CHECK(call({"tor1", "--lo", "-4"}).code == 2);
}

TEST_CASE("cw commands") {
  auto r = call({"cw", "axioms", "--demo", "t2-line", "--n", "32", "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["result"]["pass"] == true);
  CHECK(j["result"]["results"].size() == 25);

  auto tight = call({"cw", "chern", "--demo", "t2-line", "--n", "16", "--period-tol", "1e-20"});
  CHECK(tight.code == 1);
  CHECK(tight.out.find("status: identity-failure") != std::string::npos);

  auto seeded = call({"cw", "pushforward", "--n", "16", "--seed", "9", "--json"});
  CHECK(json::parse(seeded.out)["config"]["seed"] == 9);
  CHECK(seeded.out == call({"cw", "pushforward", "--n", "16", "--seed", "9", "--json"}).out);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"genus", "--cpn", "x"}).code == 2);
  CHECK(call({"genus", "--phi", "nope"}).code == 2);
  CHECK(call({"genus", "--format", "xml"}).code == 2);
  CHECK(call({"fgl", "validate", "--fgl", "nope"}).code == 2);
  CHECK(call({"cw", "axioms", "--demo", "s2-line"}).code == 2);
  auto missing = call({"cw", "chern", "--config", "/nonexistent.toml"});
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());
  CHECK(call({"--help"}).code == 0);

  const std::string path = "cobord_cli_test_bad.toml";
  {
    std::ofstream f(path);
    f << "cpn = 3\nbogus = true\n";
  }
  auto unknown = call({"genus", "--config", path});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("bogus") != std::string::npos);
  {
    std::ofstream f(path);
    f << "cpn = \"three\"\n";
  }
  CHECK(call({"genus", "--config", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("golden reports") {
  CHECK(call({"genus", "--config", root + "/configs/todd.toml", "--json"}).out == slurp(root + "/tests/golden/genus-todd.json"));
  CHECK(call({"cw", "axioms", "--config", root + "/configs/t2-line.toml", "--json"}).out ==
        slurp(root + "/tests/golden/cw-axioms-t2-line.json"));
  CHECK(call({"cw", "axioms", "--config", root + "/configs/t4-line.toml", "--json"}).out ==
        slurp(root + "/tests/golden/cw-axioms-t4-line.json"));
}
