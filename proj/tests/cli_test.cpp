#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cyclekit/cli.hpp"
#include "cyclekit/rational.hpp"

using namespace cyclekit;
using nlohmann::json;

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("q emits the exact rational as decimal strings") {
  const CliRun r = run({"q", "--aset", "even", "--n", "4", "--format", "json"});
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["aset"] == "even");
  CHECK(doc["q"]["num"] == "1");
  CHECK(doc["q"]["den"] == "6");
  CHECK(doc["count"] == "1");
  // round trip: the parsed strings reproduce the exact rational
  const BigRational parsed(BigInt(doc["q"]["num"].get<std::string>()),
                           BigInt(doc["q"]["den"].get<std::string>()));
  CHECK(parsed == BigRational(1, 6));
}

TEST_CASE("q reports zero for unreachable sizes") {
  const CliRun r = run({"q", "--aset", "even", "--n", "3", "--format", "json"});
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["q"]["num"] == "0");
  CHECK(doc["q"]["den"] == "1");
}

TEST_CASE("q dedicated formulas and csv output") {
  const CliRun r =
      run({"q", "--n", "6", "--formula", "even", "--format", "csv"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "n,aset,num,den,count,float\n6,even,1,5,24,0.2\n");
}

TEST_CASE("prob routes agree on a spot value") {
  for (const char* route : {"series", "partition", "closed"}) {
    const CliRun r = run({"prob", "--aset", "even", "--n", "4", "--route",
                          route, "--format", "json"});
    REQUIRE(r.status == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["p"]["num"] == "3");
    CHECK(doc["p"]["den"] == "8");
  }
}

TEST_CASE("oracle enumerates and samples") {
  const CliRun brute =
      run({"oracle", "--aset", "even", "--n", "4", "--format", "json"});
  REQUIRE(brute.status == 0);
  CHECK(json::parse(brute.out)["q"]["den"] == "6");

  // map order: fewest fixed points first (lexicographic on nu)
  const CliRun dist = run({"oracle", "--n", "4", "--dist", "--format", "csv"});
  REQUIRE(dist.status == 0);
  CHECK(dist.out ==
        "type,count,probability\n"
        "2+2,1,1/6\n"
        "3+1,4,2/3\n"
        "1+1+1+1,1,1/6\n");

  const CliRun mc1 = run({"oracle", "--aset", "even", "--n", "8", "--mc",
                          "--trials", "20000", "--seed", "5", "--threads", "1",
                          "--format", "json"});
  const CliRun mc2 = run({"oracle", "--aset", "even", "--n", "8", "--mc",
                          "--trials", "20000", "--seed", "5", "--threads", "7",
                          "--format", "json"});
  REQUIRE(mc1.status == 0);
  CHECK(mc1.out == mc2.out);
}

TEST_CASE("char evaluates characters and distributions") {
  const CliRun r = run({"char", "--lambda", "3,1", "--class", "4", "--format",
                        "json"});
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["chi"] == "-1");
  CHECK(doc["dimension"] == "3");

  const CliRun dist = run({"char", "--product-dist", "--n", "4", "--format",
                           "json"});
  REQUIRE(dist.status == 0);
  const json dd = json::parse(dist.out);
  CHECK(dd["classes"].size() == 5);
}

TEST_CASE("btd reports distances, histograms, and the bound") {
  const CliRun perm = run({"btd", "--perm", "3,2,1"});
  REQUIRE(perm.status == 0);
  CHECK(perm.out == "btd(3,2,1) = 2\n");

  const CliRun cyc = run({"btd", "--perm", "(1 3)(2)"});
  REQUIRE(cyc.status == 0);
  CHECK(cyc.out == "btd(3,2,1) = 2\n");

  const CliRun hist = run({"btd", "--n", "3"});
  REQUIRE(hist.status == 0);
  CHECK(hist.out == "distance,count\n0,1\n1,4\n2,1\n");

  const CliRun bound = run({"btd", "--n", "3", "--verify-bound", "--format",
                            "json"});
  REQUIRE(bound.status == 0);
  const json doc = json::parse(bound.out);
  CHECK(doc["count_hard"] == 1);
  CHECK(doc["bound"] == "1");
  CHECK(doc["holds"] == true);
}

TEST_CASE("table sweeps the asymptotic ratio") {
  const CliRun r = run({"table", "--n-min", "2", "--n-max", "6", "--format",
                        "json"});
  REQUIRE(r.status == 0);
  const json rows = json::parse(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[2]["n"] == 4);
  CHECK(rows[2]["q_even"]["den"] == "6");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({"q"}).status == 2);                      // missing --n
  CHECK(run({"nonsense"}).status == 2);               // unknown subcommand
  CHECK(run({}).status == 2);                         // no subcommand
  CHECK(run({"q", "--n", "4", "--formula", "div:0"}).status == 2);
  CHECK(run({"oracle", "--aset", "even", "--n", "12"}).status == 2);  // guard
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("verify passes and is byte-identical across worker counts") {
  const CliRun one = run({"verify", "--max-n", "5", "--random-sets", "5",
                          "--threads", "1"});
  const CliRun many = run({"verify", "--max-n", "5", "--random-sets", "5",
                           "--threads", "6"});
  REQUIRE(one.status == 0);
  REQUIRE(many.status == 0);
  CHECK(one.out == many.out);
  CHECK(one.out.find("verify: all checks passed") != std::string::npos);
}
