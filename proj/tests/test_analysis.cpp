#include <doctest.h>

#include <random>

#include "noflip/analysis.hpp"
#include "support/oracle.hpp"

using namespace noflip;
using namespace noflip::analysis;
using oracle::ts;

TEST_CASE("run_profile by hand") {
  const RunProfile p(ts("HHTH"));
  const std::vector<int> h{1, 2, 2, 2}, t{0, 0, 1, 1};
  for (int i = 1; i <= 4; ++i) {
    CHECK(p.h(i) == h[static_cast<std::size_t>(i - 1)]);
    CHECK(p.t(i) == t[static_cast<std::size_t>(i - 1)]);
  }
  const RunProfile q(ts("HHHH"));
  CHECK(q.h(4) == 4);
  CHECK(q.t(4) == 0);
}

TEST_CASE("run_profile against substring scan") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const std::string s = oracle::random_string(rng, n);
    const RunProfile p(ts(s));
    for (int i = 1; i <= n; ++i) {
      REQUIRE(p.h(i) == oracle::brute_longest_run(s, i, 'H'));
      REQUIRE(p.t(i) == oracle::brute_longest_run(s, i, 'T'));
      REQUIRE(std::max(p.h(i), p.t(i)) <= i);
      if (i > 1) REQUIRE(p.h(i) >= p.h(i - 1));
    }
  }
}

TEST_CASE("predict_by_runs") {
  auto inf = predict_by_runs(ts("HH"), ts("TT"));
  REQUIRE(inf);
  CHECK(inf->kind == OutcomeKind::Infinite);
  CHECK(inf->rule == Rule::LongestRuns);

  // Any completions of HH.. against TT..
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const auto a = ts("HH" + oracle::random_string(rng, n - 2));
    const auto b = ts("TT" + oracle::random_string(rng, n - 2));
    CHECK(predict_by_runs(a, b));
    CHECK(predict_by_runs(b, a));
  }

  CHECK_FALSE(predict_by_runs(ts("HTHT"), ts("HTHH")));
  CHECK_FALSE(predict_by_runs(ts("HH"), ts("HH")));
}

TEST_CASE("predict_large_overlap") {
  auto p = predict_large_overlap(ts("HHTH"), ts("HHTT"));
  REQUIRE(p);
  CHECK(p->kind == OutcomeKind::BobWins);
  CHECK(p->tosses == 4);

  p = predict_large_overlap(ts("HTT"), ts("HTH"));
  REQUIRE(p);
  CHECK(p->kind == OutcomeKind::AliceWins);
  CHECK(p->tosses == 3);

  p = predict_large_overlap(ts("HTTH"), ts("HHTT"));
  REQUIRE(p);
  CHECK(p->rule == Rule::ShiftByOne);
  CHECK(p->kind == OutcomeKind::BobWins);

  // Complemented image of the same shape.
  p = predict_large_overlap(ts("THHT"), ts("TTHH"));
  REQUIRE(p);
  CHECK(p->rule == Rule::ShiftByOne);

  p = predict_large_overlap(ts("HHTHT"), ts("HTHHT"));
  REQUIRE(p);
  CHECK(p->rule == Rule::ShiftByTwo);
  CHECK(p->kind == OutcomeKind::BobWins);

  // The two-letter shift needs n >= 4.
  CHECK_FALSE(predict_large_overlap(ts("HHT"), ts("HTH")));
}

TEST_CASE("predict_special_strings") {
  auto p = predict_special_strings(ts("HHH"), ts("HHT"));
  REQUIRE(p);
  CHECK(p->kind == OutcomeKind::AliceWins);

  p = predict_special_strings(ts("HHHH"), ts("THTH"));
  REQUIRE(p);
  CHECK(p->kind == OutcomeKind::BobWins);
  CHECK(p->tosses == 5);

  p = predict_special_strings(ts("HHHH"), ts("HTTT"));
  REQUIRE(p);
  CHECK(p->kind == OutcomeKind::Infinite);

  for (const char* rest : {"HH", "HT", "TH", "TT"}) {
    // TTTT also fits the constant-Bob rule; both must say the same thing.
    bool found = false;
    for (const auto& q : predict_all(ts("HTHT"), ts(std::string("TT") + rest))) {
      if (q.rule != Rule::AlternatingVsDouble) continue;
      found = true;
      CHECK(q.kind == OutcomeKind::AliceWins);
      CHECK(q.tosses == 4);
    }
    CHECK(found);
  }

  p = predict_special_strings(ts("TTHH"), ts("HTHT"));
  REQUIRE(p);
  CHECK(p->kind == OutcomeKind::BobWins);
  CHECK(p->tosses == 5);

  CHECK_FALSE(predict_special_strings(ts("HTTH"), ts("THHT")));
}

TEST_CASE("predictions agree with simulation for every pair up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t i = 0; i < (1ULL << n); ++i) {
      for (std::uint64_t j = 0; j < (1ULL << n); ++j) {
        if (i == j) continue;
        const auto a = TossString::from_bits(i, n), b = TossString::from_bits(j, n);
        const Outcome actual = outcome_of(a, b);
        for (const auto& p : predict_all(a, b)) {
          INFO(a.str() << " vs " << b.str() << " rule " << to_string(p.rule));
          REQUIRE(consistent(p, actual));
        }
      }
    }
  }
}
