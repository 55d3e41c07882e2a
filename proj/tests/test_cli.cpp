#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "powerpoly/json_io.hpp"

using powerpoly::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("index command") {
  auto r = call({"index", "--kind", "avg-weight", "--game", "[3;2,1,1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "11/18 7/36 7/36\n");
  r = call({"index", "--kind", "ssi", "--game", "[2;1,1,1]"});
  CHECK(r.out == "1/3 1/3 1/3\n");
  r = call({"index", "--kind", "avg-rep", "--dummy-revealing", "--game", "[1;1,0]"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 0\n");

  r = call({"index", "--kind", "avg-rep", "--game", "[3;2,1,1]", "--verbose", "--precision", "4"});
  CHECK(contains(r.out, "decimals: 0.5833 0.2083 0.2083"));
  CHECK(contains(r.out, "avg_quota: 2/3 (0.6667)"));

  r = call({"index", "--kind", "avg-weight", "--game", "[3;2,1,1]", "--axioms"});
  CHECK(contains(r.out, "symmetric: yes"));
  CHECK(contains(r.out, "dummy_property: n/a"));
  CHECK(contains(r.out, "representation_compatible: yes"));
  r = call({"index", "--kind", "ssi", "--game", "[3;2,1,1,1]", "--axioms"});
  CHECK(contains(r.out, "representation_compatible: no"));
}

TEST_CASE("index json") {
  auto r = call({"index", "--kind", "avg-rep", "--game", "[3;2,1,1]", "--json"});
  REQUIRE(r.code == 0);
  const auto j = powerpoly::Json::parse(r.out);
  CHECK(j["kind"] == "avg-rep");
  CHECK(j["game"] == "[3; 2, 1, 1]");
  CHECK(j["values"][0] == "7/12");
  CHECK(j["decimals"][1] == "0.208333");
  CHECK(j["avg_quota"] == "2/3");
}

TEST_CASE("polytope command") {
  auto r = call({"polytope", "--kind", "weight", "--volume", "--game", "[3;2,1,1]"});
  CHECK(r.out == "1/6\n");
  r = call({"polytope", "--kind", "rep", "--volume", "--game", "[3;2,1,1]"});
  CHECK(r.out == "1/72\n");
  r = call({"polytope", "--kind", "weight", "--vertices", "--game", "[1;1,1]"});
  CHECK(r.out == "(0) (1)\n");
  r = call({"polytope", "--kind", "weight", "--moments", "--game", "[3;2,1,1]"});
  CHECK(r.out == "11/108 7/216\n");
  r = call({"polytope", "--kind", "weight", "--game", "[1;1,1]"});
  CHECK(r.out == "(0) (1)\n1\n1/2\n");
  r = call({"polytope", "--kind", "rep", "--game", "[3;2,1,1]", "--json"});
  const auto j = powerpoly::Json::parse(r.out);
  CHECK(j["dim"] == 3);
  CHECK(j["volume"] == "1/72");
  CHECK(j["moments"].size() == 3);
}

TEST_CASE("intreps command") {
  auto r = call({"intreps", "--total", "100", "--game", "[2;1,1,1]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "count 1176\n"));
  CHECK(contains(r.out, "average 1/3 1/3 1/3\n"));
  r = call({"intreps", "--total", "100", "--with-quota", "--game", "[2;1,1,1]"});
  CHECK(contains(r.out, "count 13872\n"));
  r = call({"intreps", "--total", "100", "--game", "[3;2,1,1]"});
  CHECK(contains(r.out, "decimals 0.608832 0.195584 0.195584\n"));

  r = call({"intreps", "--convergence", "100,1000", "--game", "[3;2,1,1]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "# limit avg-weight 11/18 7/36 7/36\n"));
  CHECK(contains(r.out, "total,count,avg_1,avg_2,avg_3,l1_to_limit\n"));
  CHECK(contains(r.out, "1000,166001,0.610888,0.194556,0.194556,"));

  r = call({"intreps", "--convergence", "100,1000", "--game", "[3;2,1,1]", "--csv"});
  CHECK(r.out.rfind("total,count", 0) == 0);
  CHECK(count_lines(r.out) == 3);

  r = call({"intreps", "--convergence", "10,20", "--game", "[2;1,1,1]", "--json"});
  const auto j = powerpoly::Json::parse(r.out);
  CHECK(j["rows"].size() == 2);

  CHECK(call({"intreps", "--convergence", "100,10", "--game", "[3;2,1,1]"}).code == 2);
  CHECK(call({"intreps", "--convergence", "100,x", "--game", "[3;2,1,1]"}).code == 2);
  CHECK(call({"intreps", "--game", "[3;2,1,1]"}).code == 2);
}

TEST_CASE("table command") {
  auto r = call({"table", "--max-voters", "2"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 4);
  for (const char* g : {"[1;1] ", "[1;1,0] ", "[1;1,1] ", "[2;1,1] "}) CHECK(contains(r.out, g));

  r = call({"table"});
  CHECK(count_lines(r.out) == 37);
  CHECK(contains(r.out, "[4;2,2,1,1] avg-weight=(83/240,83/240,37/240,37/240)"));
  CHECK(contains(r.out, "[5;3,2,1,1] avg-weight="));
  CHECK(contains(r.out, "avg-rep=(77/150,41/150,8/75,8/75)"));
  CHECK(contains(r.out, "[3;2,1,1] avg-weight=(11/18,7/36,7/36) avg-rep=(7/12,5/24,5/24)\n"));

  CHECK(call({"table", "--max-voters", "5"}).code == 3);
}

TEST_CASE("table json round trip") {
  const auto r = call({"table", "--max-voters", "4", "--json"});
  REQUIRE(r.code == 0);
  const auto j = powerpoly::Json::parse(r.out);
  const auto rows = powerpoly::table_from_json(j);
  CHECK(rows.size() == 37);
  CHECK(powerpoly::table_to_json(rows, j["precision"].get<int>()).dump(2) + "\n" == r.out);
}

TEST_CASE("exit codes") {
  CHECK(call({"index", "--kind", "ssi", "--game", "[3;2,1"}).code == 2);
  CHECK(call({"index", "--kind", "banzhaf", "--game", "[3;2,1,1]"}).code == 2);
  CHECK(call({"index", "--kind", "ssi"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"polytope", "--kind", "simplex", "--game", "[1;1]"}).code == 2);
  CHECK(call({"index", "--kind", "ssi", "--game", "[0;1,1]"}).code == 2);

  const auto big = call({"index", "--kind", "avg-weight", "--game", "[5;1,1,1,1,1,1,1,1,1]"});
  CHECK(big.code == 3);
  CHECK(contains(big.err, "powerpoly mc"));
  CHECK(call({"index", "--kind", "ssi", "--game", "[5;1,1,1,1,1,1,1,1,1]"}).code == 0);
  CHECK(call({"mc", "--kind", "weight", "--game", "[2;1,1,1]"}).code == 2);
}

TEST_CASE("scale warnings") {
  const auto r = call({"index", "--kind", "avg-rep", "--game", "[3;1,1,1,1,1]"});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "warning"));
  CHECK(call({"index", "--kind", "avg-rep", "--game", "[3;2,1,1,1]"}).err.empty());
}

TEST_CASE("precision from the environment") {
  ::setenv("POWERPOLY_PRECISION", "3", 1);
  auto r = call({"index", "--kind", "avg-weight", "--game", "[3;2,1,1]", "--verbose"});
  CHECK(contains(r.out, "decimals: 0.611 0.194 0.194"));
  r = call({"index", "--kind", "avg-weight", "--game", "[3;2,1,1]", "--verbose", "--precision", "2"});
  CHECK(contains(r.out, "decimals: 0.61 0.19 0.19"));
  ::setenv("POWERPOLY_PRECISION", "lots", 1);
  CHECK(call({"index", "--kind", "avg-weight", "--game", "[3;2,1,1]", "--verbose"}).code == 2);
  ::unsetenv("POWERPOLY_PRECISION");
}

TEST_CASE("determinism") {
  const std::vector<std::string> a{"index", "--kind", "avg-rep", "--game", "[4;3,2,2,1]", "--json", "--axioms"};
  CHECK(call(a).out == call(a).out);
  const std::vector<std::string> m{"mc", "--kind", "rep", "--game", "[3;2,1,1]", "--seed", "9", "--samples", "20000"};
  const auto first = call(m);
  CHECK(first.code == 0);
  CHECK(first.out == call(m).out);
  CHECK(contains(first.out, "avg_quota "));
  const std::vector<std::string> other{"mc", "--kind", "rep", "--game", "[3;2,1,1]", "--seed", "10", "--samples",
                                       "20000"};
  CHECK(first.out != call(other).out);
}
