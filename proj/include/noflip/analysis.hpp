#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noflip/game.hpp"
#include "noflip/toss_string.hpp"

namespace noflip::analysis {

// Longest run of H and of T inside every prefix of a string.
class RunProfile {
 public:
  explicit RunProfile(const TossString& source);

  const TossString& source() const noexcept { return source_; }

  // 1 <= p <= n.
  int h(int p) const { return h_.at(static_cast<std::size_t>(p - 1)); }
  int t(int p) const { return t_.at(static_cast<std::size_t>(p - 1)); }
  int longest(Toss letter, int p) const { return letter == Toss::H ? h(p) : t(p); }

 private:
  TossString source_;
  std::vector<int> h_;
  std::vector<int> t_;
};

inline RunProfile run_profile(const TossString& s) { return RunProfile(s); }

enum class Rule {
  LongestRuns,         // prefix run lengths block both players
  CommonPrefix,        // equal except the last letter
  ShiftByOne,          // Alice HT.., Bob HH.., B[2..n] = A[1..n-1]
  ShiftByTwo,          // Alice HH.., Bob HT.., B[3..n] = A[1..n-2]
  AliceConstant,       // Alice's string is one letter repeated
  BobConstant,         // Bob's string is one letter repeated
  AlternatingVsDouble  // alternating string against one starting with two of the other letter
};

std::string to_string(Rule rule);

struct Prediction {
  Rule rule;
  OutcomeKind kind;
  std::optional<int> tosses;  // present when the rule fixes the game length
};

// Both strings must have equal length and differ; otherwise every predicate
// returns nullopt.
std::optional<Prediction> predict_by_runs(const TossString& alice, const TossString& bob);
std::optional<Prediction> predict_large_overlap(const TossString& alice,
                                                const TossString& bob);
std::optional<Prediction> predict_special_strings(const TossString& alice,
                                                  const TossString& bob);

// Every prediction any predicate makes for the pair.
std::vector<Prediction> predict_all(const TossString& alice, const TossString& bob);

// True when the prediction agrees with the simulated outcome.
bool consistent(const Prediction& p, const Outcome& actual);

}  // namespace noflip::analysis
