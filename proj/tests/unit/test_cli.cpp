#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = spectool::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen") {
    CHECK(run({"gen", "--family", "complete", "--params", "3"}).out == "Bw\n");
    CHECK(run({"gen", "--family", "bipartite", "--params", "2,3"}).out == "D]o\n");
    CHECK(run({"gen", "--family", "petersen"}).code == 0);
    CHECK(run({"gen", "--family", "cycle", "--params", "2"}).code == 3);
    CHECK(run({"gen", "--family", "cube", "--params", "3"}).code == 3);
    CHECK(run({"gen", "--family", "complete", "--params", "1,2"}).code == 3);
    CHECK(run({"gen", "--family", "complete", "--params", "70"}).code == 3);
    CHECK(run({"gen", "--family", "path", "--params", "3", "--format", "edgelist"}).out == "3 2\n0 1\n1 2\n");
  }

  TEST_CASE("analyze") {
    auto r = run({"analyze", "--json"}, "Bw\n");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["spectrum"]["lambda1"].get<double>() == doctest::Approx(2));
    CHECK(j[0]["stats"]["triangles"] == 1);
    CHECK(j[0]["spectral_mantel"]["outcome"] == "HasTriangle");
    CHECK(j[0]["bounds"].size() == 6);

    const auto k33 = run({"gen", "--family", "bipartite", "--params", "3,3"}).out;
    const auto cyc = nlohmann::json::parse(run({"analyze", "--json", "--cycles", "6"}, k33).out);
    CHECK(cyc[0]["cycles"]["lengths"] == nlohmann::json::array({4, 6}));

    const auto c5 = run({"gen", "--family", "cycle", "--params", "5"}).out;
    const auto a5 = nlohmann::json::parse(run({"analyze", "--json", "--walks", "4"}, c5).out);
    CHECK(a5[0]["spectrum"]["lambda1"].get<double>() == doctest::Approx(2));
    CHECK(a5[0]["walks"]["totals"][4] == "80");

    r = run({"analyze"}, "Bw\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("HasTriangle") != std::string::npos);

    const auto edges = nlohmann::json::parse(run({"analyze", "--json"}, "3 3\n0 1\n1 2\n0 2\n").out);
    CHECK(edges[0]["graph6"] == "Bw");
    CHECK(nlohmann::json::parse(run({"analyze", "--json"}, "").out).empty());
  }

  TEST_CASE("analyze parse errors") {
    auto r = run({"analyze"}, "Bw\nB!\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    r = run({"analyze"}, "3 1\n0 7\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(run({"analyze", "/nonexistent/file"}).code == 2);
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "--theorem", "spectral-mantel", "--max-n", "5", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"config", "totals", "tight", "counterexamples", "runtime_ms"}) CHECK(j.contains(key));
    CHECK(j["totals"]["spectral-mantel"]["violated"] == 0);

    const auto one = run({"verify", "--theorem", "all", "--max-n", "5", "--jobs", "1", "--json", "--no-timing"});
    const auto four = run({"verify", "--theorem", "all", "--max-n", "5", "--jobs", "4", "--json", "--no-timing"});
    CHECK(one.out == four.out);

    CHECK(run({"verify", "--max-n", "9"}).code == 3);
    CHECK(run({"verify", "--max-n", "8"}).code == 3);
    CHECK(run({"verify", "--theorem", "nope"}).code == 3);
    CHECK(run({"verify", "--dedup", "fuzzy"}).code == 3);
    CHECK(run({"verify", "--jobs", "0"}).code == 3);
    CHECK(run({"verify", "--max-n", "4", "--dedup", "canonical", "--theorem", "mantel,hsf"}).code == 0);
  }

  TEST_CASE("fuzz") {
    const std::vector<std::string> args{"fuzz", "--dist", "gnp:15,0.5", "--count", "50",
                                        "--seed", "7", "--json", "--no-timing"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"fuzz", "--dist", "gnp:30,1.5"}).code == 3);
    CHECK(run({"fuzz", "--dist", "torus:3"}).code == 3);
    CHECK(run({"fuzz"}).code == 3);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 3);
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"--help"}).code == 0);
  }
}
