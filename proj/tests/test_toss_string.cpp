#include <doctest.h>

#include <random>

#include "noflip/toss_string.hpp"
#include "support/oracle.hpp"

using noflip::ParseError;
using noflip::Toss;
using noflip::TossString;

TEST_CASE("parse accepts H/T words") {
  const auto s = TossString::parse("HHTT");
  CHECK(s.length() == 4);
  CHECK(s.at(1) == Toss::H);
  CHECK(s.at(2) == Toss::H);
  CHECK(s.at(3) == Toss::T);
  CHECK(s.at(4) == Toss::T);
  CHECK(s.str() == "HHTT");
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(TossString::parse("HXT"), ParseError);
  CHECK_THROWS_AS(TossString::parse(""), ParseError);
  CHECK_THROWS_AS(TossString::parse("hT"), ParseError);
  CHECK_THROWS_AS(TossString::parse(std::string(64, 'H')), ParseError);
  CHECK(TossString::parse(std::string(63, 'T')).length() == 63);
}

TEST_CASE("complement is an involution") {
  CHECK(noflip::complement(Toss::H) == Toss::T);
  CHECK(noflip::complement(noflip::complement(Toss::T)) == Toss::T);
  CHECK(TossString::parse("HHT").complemented().str() == "TTH");

  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 63);
    const std::string text = oracle::random_string(rng, n);
    const auto s = TossString::parse(text);
    CHECK(s.str() == text);
    CHECK(s.complemented().complemented() == s);
    CHECK(s.complemented().str() == oracle::complement(text));
  }
}

TEST_CASE("packed order is lexicographic with H before T") {
  CHECK(TossString::parse("HHT") < TossString::parse("HTH"));
  CHECK(TossString::parse("HTT") < TossString::parse("THH"));
  CHECK(TossString::from_bits(0, 3).str() == "HHH");
  CHECK(TossString::from_bits(5, 3).str() == "THT");
}

TEST_CASE("structural helpers") {
  const auto s = TossString::parse("HTHHT");
  CHECK(s.slice(2, 4).str() == "THH");
  CHECK((s.slice(1, 2) + Toss::T).str() == "HTT");
  CHECK((s + TossString::parse("TT")).str() == "HTHHTTT");
  CHECK(s.with(5, Toss::H).str() == "HTHHH");
  CHECK(s.first_repeat() == 3);
  CHECK_FALSE(s.is_alternating());
  CHECK(TossString::parse("THTHT").is_alternating());
  CHECK(TossString::parse("THTHT").first_repeat() == 0);
  CHECK(TossString::parse("TTTT").is_constant());
  CHECK(TossString::parse("HHHTH").leading_run() == 3);
  CHECK(TossString::parse("H").is_alternating());
  CHECK(TossString::constant(Toss::T, 3).str() == "TTT");
  CHECK_THROWS_AS(s.slice(3, 2), std::out_of_range);
}
