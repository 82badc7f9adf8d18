#pragma once

#include <array>
#include <cstdint>

#include "noflip/toss_string.hpp"

namespace noflip {

// Matching automaton for one player's string.
//
// State i means the longest suffix of the output that is a prefix of the
// pattern has length i. Transitions are defined for states 0..n-1; state n
// is absorbing (the string has appeared).
class ProgressAutomaton {
 public:
  explicit ProgressAutomaton(const TossString& pattern);

  const TossString& pattern() const noexcept { return pattern_; }
  int length() const noexcept { return pattern_.length(); }

  int next(int state, Toss t) const noexcept {
    return delta_[static_cast<std::size_t>(state)][static_cast<std::size_t>(t)];
  }

  // Length of the longest proper border of pattern[1..i], for 1 <= i <= n.
  int failure(int i) const noexcept { return failure_[static_cast<std::size_t>(i)]; }

 private:
  TossString pattern_;
  std::array<std::array<std::uint8_t, 2>, TossString::kMaxLength> delta_{};
  std::array<std::uint8_t, TossString::kMaxLength + 1> failure_{};
};

}  // namespace noflip
