#pragma once

// Test-only reference implementations. Everything here works on plain
// std::string and rescans the output from scratch; none of it touches the
// automaton or the sweep kernel.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "noflip/toss_string.hpp"

namespace oracle {

// Longest suffix of `output` that is a prefix of `pattern`, capped at |pattern|.
inline int suffix_progress(const std::string& output, const std::string& pattern) {
  const int limit = static_cast<int>(std::min(output.size(), pattern.size()));
  for (int i = limit; i > 0; --i) {
    if (output.compare(output.size() - static_cast<std::size_t>(i), static_cast<std::size_t>(i),
                       pattern, 0, static_cast<std::size_t>(i)) == 0) {
      return i;
    }
  }
  return 0;
}

struct NaiveState {
  int a, b, turn;  // turn: 0 = Alice
  bool operator==(const NaiveState&) const = default;
};

struct NaiveGame {
  char winner;  // 'A', 'B' or 'I'
  int tosses;   // winning toss, or toss index where a state repeated
  std::string output;
  std::vector<NaiveState> states;
};

// Plays by the flip rule directly and detects repetition by linear search.
inline NaiveGame naive_play(const std::string& alice, const std::string& bob) {
  const int n = static_cast<int>(alice.size());
  NaiveGame g{'I', 0, {}, {{0, 0, 0}}};
  for (;;) {
    const NaiveState s = g.states.back();
    const std::string& mover = s.turn == 0 ? alice : bob;
    const int p = s.turn == 0 ? s.a : s.b;
    g.output.push_back(mover[static_cast<std::size_t>(p)]);
    const NaiveState next{suffix_progress(g.output, alice), suffix_progress(g.output, bob),
                          1 - s.turn};
    g.states.push_back(next);
    const int k = static_cast<int>(g.output.size());
    if (next.a == n) return g.winner = 'A', g.tosses = k, g;
    if (next.b == n) return g.winner = 'B', g.tosses = k, g;
    const auto first = std::find(g.states.begin(), g.states.end() - 1, next);
    if (first != g.states.end() - 1) return g.winner = 'I', g.tosses = k, g;
  }
}

inline std::string complement(std::string s) {
  for (char& c : s) c = c == 'H' ? 'T' : 'H';
  return s;
}

// Longest run of `letter` anywhere in s[0..p), by scanning every substring.
inline int brute_longest_run(const std::string& s, int p, char letter) {
  int best = 0;
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      bool all = true;
      for (int x = i; x <= j; ++x) all = all && s[static_cast<std::size_t>(x)] == letter;
      if (all) best = std::max(best, j - i + 1);
    }
  }
  return best;
}

inline std::string str_of(std::uint64_t bits, int n) {
  std::string s(static_cast<std::size_t>(n), 'H');
  for (int i = 0; i < n; ++i) {
    if ((bits >> (n - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = 'T';
  }
  return s;
}

inline std::string random_string(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::string s(static_cast<std::size_t>(n), 'H');
  for (char& c : s) c = coin(rng) ? 'T' : 'H';
  return s;
}

inline noflip::TossString ts(const std::string& s) { return noflip::TossString::parse(s); }

}  // namespace oracle
