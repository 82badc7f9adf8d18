#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "noflip/cli.hpp"
#include "noflip/game.hpp"
#include "support/oracle.hpp"

using noflip::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string line(const std::string& text, std::size_t index) {
  std::istringstream is(text);
  std::string l;
  for (std::size_t i = 0; i <= index && std::getline(is, l); ++i) {
  }
  return l;
}

}  // namespace

TEST_CASE("simulate: worked example with states") {
  const auto r = invoke({"simulate", "--alice", "HHTT", "--bob", "THHH", "--states"});
  CHECK(r.code == 0);
  CHECK(line(r.out, 0) == "BobWins at toss 8");
  CHECK(line(r.out, 1) == "trace: HTHHTHHH");
  CHECK(line(r.out, 2) ==
        "states: (0,0,A), (1,0,B), (0,1,A), (1,2,B), (2,3,A), (3,1,B), (1,2,A), (2,3,B), (2,4,A)");
}

TEST_CASE("simulate: infinite game") {
  const auto r = invoke({"simulate", "--alice", "HH", "--bob", "TT"});
  CHECK(r.code == 0);
  CHECK(line(r.out, 0) == "Infinite (entry 1, period 2)");
  CHECK(line(r.out, 1) == "trace: HTH...");
  CHECK(r.out.find("prediction: longest-runs -> Infinite") != std::string::npos);
}

TEST_CASE("simulate: usage errors") {
  auto r = invoke({"simulate", "--alice", "HH", "--bob", "HH"});
  CHECK(r.code == 2);
  CHECK(r.err.find("strings must be distinct") != std::string::npos);

  r = invoke({"simulate", "--alice", "HXH", "--bob", "HHT"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--alice") != std::string::npos);

  r = invoke({"simulate", "--alice", "HH", "--bob", "HHT"});
  CHECK(r.code == 2);
  CHECK(r.err.find("same length") != std::string::npos);

  r = invoke({"simulate", "--alice", "HH", "--bob", "TH", "--format", "csv"});
  CHECK(r.code == 2);

  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("simulate: JSON schema and trace round trip") {
  const auto r = invoke({"simulate", "--alice", "HTHHT", "--bob", "THTHH", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["outcome"]["kind"] == "BobWins");
  CHECK(j["outcome"]["tosses"] == 6);
  CHECK(j["trace"] == "HTHTHH");
  REQUIRE(j["states"].size() == 7);
  CHECK(j["states"][0] == nlohmann::json::parse(R"([0,0,"A",0])"));

  // Re-deriving progress from the printed trace reproduces the printed states.
  const std::string trace = j["trace"];
  for (std::size_t k = 0; k < j["states"].size(); ++k) {
    const std::string prefix = trace.substr(0, k);
    CHECK(j["states"][k][0] == oracle::suffix_progress(prefix, "HTHHT"));
    CHECK(j["states"][k][1] == oracle::suffix_progress(prefix, "THTHH"));
  }

  const auto inf = nlohmann::json::parse(
      invoke({"simulate", "--alice", "HH", "--bob", "TT", "--format", "json"}).out);
  CHECK(inf["outcome"]["kind"] == "Infinite");
  CHECK(inf["outcome"]["entry"] == 1);
  CHECK(inf["outcome"]["period"] == 2);
}

TEST_CASE("force") {
  auto r = invoke({"force", "--role", "bob", "--goal", "win", "--opponent", "HTHHT"});
  CHECK(r.code == 0);
  CHECK(line(r.out, 0) == "THTHH");

  r = invoke({"force", "--role", "bob", "--goal", "infinite", "--opponent", "HTHT"});
  CHECK(r.code == 0);
  CHECK(line(r.out, 0) == "impossible (short-alternating-exception)");

  r = invoke({"force", "--role", "alice", "--goal", "win", "--opponent", "THHH"});
  CHECK(r.code == 0);
  CHECK(line(r.out, 0) == "HTHH");
  CHECK(r.out.find("AliceWins at toss 4") != std::string::npos);

  r = invoke({"force", "--role", "bob", "--goal", "loss", "--opponent", "HHTHTHTT",
              "--search-cap", "6"});
  CHECK(r.code == 3);

  r = invoke({"force", "--role", "carol", "--goal", "win", "--opponent", "HT"});
  CHECK(r.code == 2);
  r = invoke({"force", "--role", "bob", "--goal", "win", "--opponent", "HQ"});
  CHECK(r.code == 2);

  const auto j = nlohmann::json::parse(
      invoke({"force", "--role", "bob", "--goal", "win", "--opponent", "HTHT", "--format",
              "json"}).out);
  CHECK(j["string"] == "HHTH");
  CHECK(j["status"] == "constructed");
}

TEST_CASE("enumerate") {
  auto r = invoke({"enumerate", "--n", "4", "--what", "census", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,total,bob_wins,alice_wins,infinite\n1,2,0,2,0\n2,12,6,4,2\n3,56,16,26,14\n"
        "4,240,84,64,92\n");

  r = invoke({"enumerate", "--n", "8", "--what", "longest"});
  CHECK(line(r.out, 0) == "1,3,4,8,9,13,18,22");

  r = invoke({"enumerate", "--n", "4", "--what", "noloss"});
  CHECK(line(r.out, 3) == "n=4: HHTT");

  const auto j = nlohmann::json::parse(
      invoke({"enumerate", "--n", "2", "--format", "json", "--threads", "2"}).out);
  CHECK(j[1]["bob_wins"] == 6);
  CHECK(j[1]["proportions"]["infinite"].get<double>() == doctest::Approx(2.0 / 12));
  CHECK(j[1]["proportions"]["infinite"].dump() == "0.166666666666667");

  CHECK(invoke({"enumerate", "--n", "0"}).code == 2);
  CHECK(invoke({"enumerate", "--n", "99"}).code == 2);
  CHECK(invoke({"enumerate", "--n", "3", "--threads", "zero"}).code == 2);
}

TEST_CASE("enumerate output does not depend on thread count") {
  const auto one = invoke({"enumerate", "--n", "6", "--what", "longest", "--format", "json",
                           "--threads", "1"});
  const auto four = invoke({"enumerate", "--n", "6", "--what", "longest", "--format", "json",
                            "--threads", "4"});
  CHECK(one.out == four.out);
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "--n", "6", "--suite", "bound"});
  CHECK(r.code == 0);
  CHECK(r.out == "suite bound n=6: 4032 checked, 0 violations\n");
  CHECK(invoke({"verify", "--n", "5", "--suite", "predicates"}).code == 0);
  CHECK(invoke({"verify", "--n", "4", "--suite", "forcing"}).code == 0);
  CHECK(invoke({"verify", "--n", "4", "--suite", "bogus"}).code == 2);
}
