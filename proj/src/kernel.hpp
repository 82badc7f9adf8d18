#pragma once

// Flattened game kernel used by the sweeps. Plays one pair using
// precomputed transition tables for every string of a given length.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "noflip/automaton.hpp"
#include "noflip/game.hpp"

namespace noflip::kernel {

// Transition tables for all 2^n strings of length n:
// row(s)[state * 2 + toss] for state in 0..n-1.
class AutomatonBank {
 public:
  explicit AutomatonBank(int n);

  int length() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  const std::uint8_t* row(std::uint64_t s) const noexcept {
    return table_.data() + s * static_cast<std::uint64_t>(2 * n_);
  }

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

struct FastOutcome {
  OutcomeKind kind;
  int tosses;  // winning toss, or the toss index at which a state repeated
};

// Per-thread scratch for state-repetition detection. Entries are stamped
// with a game counter so nothing needs clearing between games.
class VisitTable {
 public:
  explicit VisitTable(int n)
      : n_(n), stamp_(static_cast<std::size_t>(2 * (n + 1) * (n + 1)), 0) {}

  // Starts a new game.
  void reset() noexcept {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0U);
      epoch_ = 1;
    }
  }

  // Marks the triplet; returns false if it was already seen this game.
  bool visit(int a, int b, int turn) noexcept {
    auto& s = stamp_[static_cast<std::size_t>(((a * (n_ + 1)) + b) * 2 + turn)];
    if (s == epoch_) return false;
    s = epoch_;
    return true;
  }

 private:
  int n_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
};

inline FastOutcome fast_play(const AutomatonBank& bank, std::uint64_t alice,
                             std::uint64_t bob, VisitTable& visits) noexcept {
  const int n = bank.length();
  const std::uint8_t* da = bank.row(alice);
  const std::uint8_t* db = bank.row(bob);
  int a = 0, b = 0, turn = 0, k = 0;
  visits.reset();
  for (;;) {
    if (!visits.visit(a, b, turn)) return {OutcomeKind::Infinite, k};
    const int p = turn == 0 ? a : b;
    const std::uint64_t mover = turn == 0 ? alice : bob;
    const int toss = static_cast<int>((mover >> (n - 1 - p)) & 1U);
    a = da[a * 2 + toss];
    b = db[b * 2 + toss];
    ++k;
    if (a == n) return {OutcomeKind::AliceWins, k};
    if (b == n) return {OutcomeKind::BobWins, k};
    turn ^= 1;
  }
}

}  // namespace noflip::kernel
