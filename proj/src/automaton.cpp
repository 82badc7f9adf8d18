#include "noflip/automaton.hpp"

namespace noflip {

ProgressAutomaton::ProgressAutomaton(const TossString& pattern)
    : pattern_(pattern) {
  const int n = pattern.length();
  for (int c = 0; c < 2; ++c) {
    delta_[0][static_cast<std::size_t>(c)] =
        static_cast<int>(pattern.at(1)) == c ? 1 : 0;
  }
  // failure_[i + 1] is the state reached from the border of pattern[1..i]
  // on pattern[i + 1]; for i >= 1 that border is strictly shorter than i,
  // so its row is already filled.
  failure_[1] = 0;
  for (int i = 1; i < n; ++i) {
    const int border = failure_[static_cast<std::size_t>(i)];
    const int want = static_cast<int>(pattern.at(i + 1));
    for (int c = 0; c < 2; ++c) {
      delta_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
          c == want ? static_cast<std::uint8_t>(i + 1)
                    : delta_[static_cast<std::size_t>(border)][static_cast<std::size_t>(c)];
    }
    failure_[static_cast<std::size_t>(i + 1)] =
        delta_[static_cast<std::size_t>(border)][static_cast<std::size_t>(want)];
  }
}

}  // namespace noflip
