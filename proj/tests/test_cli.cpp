#include "doctest.h"
#include "sieve/cli.hpp"
#include "sieve/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace sieve;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_manifest(const std::string& name, const std::string& body) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("documented invocations") {
  auto v = call({"verify", "--theorem", "ord", "--n", "3", "--mode", "all", "--format", "json"});
  CHECK(v.code == 0);
  const auto rep = report_from_json(Json::parse(v.out));
  std::vector<long> brute;
  for (auto& r : rep.rows) brute.push_back(r.brute.get_si());
  CHECK(brute == std::vector<long>{5, 0, 2, 3, 2, 0});
  CHECK(rep.overall);

  auto p = call({"poly", "--theorem", "tmn", "--n", "2"});
  CHECK(p.code == 0);
  CHECK(p.out == "1 + 2q^2 + q^3 + 2q^4 + q^5 + 2q^6 + q^8\n");

  auto c = call({"count", "--family", "tm_n", "--n", "2"});
  CHECK(c.code == 0);
  CHECK(c.out == "10\n");
}

TEST_CASE("formats") {
  auto text = call({"verify", "--theorem", "ord", "--n", "3"});
  CHECK(text.out.find("overall: PASS") != std::string::npos);
  auto csv = call({"fixtable", "--theorem", "ord", "--n", "2", "--format", "csv"});
  CHECK(csv.out.rfind("family,kind,e,d,brute,closed,poly,agree\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
  auto one = call({"fixtable", "--theorem", "ord", "--n", "3", "--e", "4", "--format", "json"});
  const Json j = Json::parse(one.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["brute"] == "2");
  CHECK(j["rows"][0]["d"] == 3);
  auto poly = call({"poly", "--theorem", "ord_deg", "--degrees", "2,2", "--format", "json"});
  const Json pj = Json::parse(poly.out);
  CHECK(polynomial_from_json(pj["polynomial"]).to_string() == "1 + q^2 + q^4");
  CHECK(pj["checks"]["nonneg"] == true);
  auto en = call({"enumerate", "--family", "by_leaves", "--n", "3", "--k", "2"});
  CHECK(en.out == "((()))\n(())()\n()(())\n");
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"verify", "--theorem", "tmd", "--j", "1", "--degrees", "1,0,1", "--mode", "all",
                                      "--format", "json", "--jobs", "3"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("usage errors") {
  auto r = call({"verify", "--n", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--theorem") != std::string::npos);
  r = call({"verify", "--theorem", "ord", "--n", "3", "--mode", "sometimes"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--mode") != std::string::npos);
  r = call({"count", "--family", "by_leaves", "--n", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--k") != std::string::npos);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"verify", "--theorem", "int", "--n", "1", "--k", "2"}).code == 2);
  CHECK(call({"orbit", "--tree", "()()", "--kind", "leaf"}).code == 2);
  CHECK(call({"verify", "--help"}).code == 0);
}

TEST_CASE("size guard flag and environment") {
  CHECK(call({"verify", "--theorem", "ord", "--n", "11"}).code == 2);
  CHECK(call({"verify", "--theorem", "ord", "--n", "11", "--size-guard", "11"}).code == 0);
  setenv("SIEVE_FOREST_SIZE_GUARD", "3", 1);
  CHECK(call({"verify", "--theorem", "ord", "--n", "4"}).code == 2);
  CHECK(call({"enumerate", "--family", "all_trees", "--n", "4"}).code == 2);
  unsetenv("SIEVE_FOREST_SIZE_GUARD");
  CHECK(call({"verify", "--theorem", "ord", "--n", "4"}).code == 0);
}

TEST_CASE("orbit, biject and sumcheck") {
  CHECK(call({"orbit", "--tree", "(())"}).out == "(())\n()()\n");
  CHECK(call({"orbit", "--word", "ENSW"}).out == "ENSW\nNSEW\nNEWS\nEWNS\n");
  CHECK(call({"biject", "--tree", "(())", "--to", "ncm"}).out == "[[0,3],[1,2]]\n");
  CHECK(call({"biject", "--from", "ncp", "--input", "[[1],[2]]"}).out == "(())\n");
  CHECK(call({"biject", "--from", "dissection", "--input", R"({"k":4,"diagonals":[[1,3]]})"}).out == "((()())())\n");
  auto cubic = call({"biject", "--word", "ENSW", "--to", "cubic"});
  CHECK(call({"biject", "--from", "cubic", "--input", cubic.out}).out == "ENSW\n");
  auto split = call({"biject", "--word", "NEEWSW", "--to", "split"});
  CHECK(call({"biject", "--from", "split", "--input", split.out}).out == "NEEWSW\n");
  CHECK(call({"biject", "--from", "ncp", "--input", "[[1,3],[2,4]]"}).code == 2);
  CHECK(call({"sumcheck", "--identity", "refined_leaves", "--n", "6"}).code == 0);
  CHECK(call({"sumcheck", "--identity", "chu_vandermonde", "--n", "4"}).code == 0);
  CHECK(call({"sumcheck", "--identity", "other", "--n", "4"}).code == 2);
}

TEST_CASE("verification sweep") {
  auto r = call({"verify", "--theorem", "tmn", "--sweep", "--mode", "all"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
}

TEST_CASE("batch manifests") {
  auto empty = call({"batch", "--manifest", temp_manifest("sieve_empty.json", "[]"), "--format", "json"});
  CHECK(empty.code == 0);
  CHECK(Json::parse(empty.out)["commands"].empty());

  const std::string good = temp_manifest(
      "sieve_good.json",
      R"([["verify","--theorem","ord","--n","3","--mode","all"],
          {"command":"poly","theorem":"ord_deg","degrees":[2,2]},
          {"command":"verify","theorem":"ncm","j":4,"mode":"all"}])");
  auto ok = call({"batch", "--manifest", good});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("3 commands, 0 failed") != std::string::npos);

  const std::string bad = temp_manifest(
      "sieve_bad.json",
      R"([["verify","--theorem","ord","--n","3"], {"command":"verify","theorem":"int","n":1,"k":2}])");
  auto flagged = call({"batch", "--manifest", bad, "--format", "json"});
  CHECK(flagged.code == 1);
  const Json j = Json::parse(flagged.out);
  CHECK(j["failed"] == 1);
  CHECK(j["commands"][0]["exit"] == 0);
  CHECK(j["commands"][1]["exit"] == 2);

  CHECK(call({"batch", "--manifest", temp_manifest("sieve_broken.json", "{")}).code == 2);
  CHECK(call({"batch", "--manifest", temp_manifest("sieve_shape.json", R"({"command":"verify"})")}).code == 2);
  CHECK(call({"batch", "--manifest", temp_manifest("sieve_entry.json", "[42]")}).code == 2);
  CHECK(call({"batch", "--manifest", "/nonexistent/manifest.json"}).code == 2);
}
