#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "noflip/game.hpp"
#include "noflip/toss_string.hpp"

namespace noflip::enumerate {

// Outcome counts over all ordered pairs (A, B) with A != B.
struct OutcomeCensus {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t alice_wins = 0;
  std::uint64_t bob_wins = 0;
  std::uint64_t infinite = 0;

  double proportion(OutcomeKind kind) const;
  friend bool operator==(const OutcomeCensus&, const OutcomeCensus&) = default;
};

using StringPair = std::pair<TossString, TossString>;  // (alice, bob)

struct LengthStats {
  int n = 0;
  int max_finite_tosses = 0;
  std::vector<StringPair> argmax_pairs;  // lexicographic by (alice, bob)
  friend bool operator==(const LengthStats&, const LengthStats&) = default;
};

struct SweepOptions {
  int threads = 0;  // 0: OpenMP default
};

constexpr int kDefaultSweepCap = 14;

// Largest n accepted by the sweeps: NOFLIP_SWEEP_CAP if set to a valid
// integer in [1, 63], else kDefaultSweepCap.
int sweep_cap();

// Throws std::out_of_range unless 1 <= n <= sweep_cap().
void check_sweep_length(int n);

OutcomeCensus census(int n, const SweepOptions& opts = {});
LengthStats longest_finite(int n, const SweepOptions& opts = {});

// H-first, non-constant Alice strings against which no Bob string loses.
std::vector<TossString> no_loss_strings(int n, const SweepOptions& opts = {});

// Straightforward single-threaded versions built on noflip::play, kept to
// check the parallel kernels.
namespace reference {
OutcomeCensus census(int n);
LengthStats longest_finite(int n);
std::vector<TossString> no_loss_strings(int n);
}  // namespace reference

}  // namespace noflip::enumerate
