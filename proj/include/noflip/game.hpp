#pragma once

#include <string>
#include <vector>

#include "noflip/automaton.hpp"
#include "noflip/toss_string.hpp"

namespace noflip {

enum class Player : std::uint8_t { Alice = 0, Bob = 1 };

constexpr Player other(Player p) noexcept {
  return p == Player::Alice ? Player::Bob : Player::Alice;
}

constexpr char to_char(Player p) noexcept { return p == Player::Alice ? 'A' : 'B'; }

// The triplet (a, b, turn) plus the number of tosses made so far.
struct GameState {
  int a = 0;
  int b = 0;
  Player turn = Player::Alice;
  int k = 0;

  bool same_triplet(const GameState& o) const noexcept {
    return a == o.a && b == o.b && turn == o.turn;
  }
  friend bool operator==(const GameState&, const GameState&) = default;
};

std::string to_string(const GameState& s);  // "(a,b,A)"

enum class OutcomeKind : std::uint8_t { AliceWins, BobWins, Infinite };

std::string to_string(OutcomeKind kind);  // "AliceWins" | "BobWins" | "Infinite"

struct Outcome {
  OutcomeKind kind = OutcomeKind::Infinite;
  int tosses = 0;  // winning toss count; unused for Infinite
  int entry = 0;   // Infinite: toss index where the repeated state first occurred
  int period = 0;  // Infinite: cycle length

  static Outcome alice_wins(int k) { return {OutcomeKind::AliceWins, k, 0, 0}; }
  static Outcome bob_wins(int k) { return {OutcomeKind::BobWins, k, 0, 0}; }
  static Outcome infinite(int entry, int period) {
    return {OutcomeKind::Infinite, 0, entry, period};
  }

  bool finite() const noexcept { return kind != OutcomeKind::Infinite; }
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// "BobWins at toss 8" / "Infinite (entry 1, period 2)"
std::string describe(const Outcome& o);

struct GameTrace {
  std::vector<Toss> tosses;
  std::vector<GameState> states;  // one before each toss plus the final one

  std::string output() const;  // tosses as an H/T string
};

struct PlayResult {
  Outcome outcome;
  GameTrace trace;
};

// Longest possible finite game: 4n - 4 for n >= 2. A length-1 game always
// ends on the first toss, so the bound there is 1.
constexpr int finite_game_bound(int n) noexcept { return n == 1 ? 1 : 4 * n - 4; }

// The toss the mover appends: mover[p + 1] where p is the mover's progress.
// Throws std::logic_error when that progress already equals n.
Toss next_choice(const GameState& state, const TossString& mover);

// One toss. Throws std::logic_error if either progress already equals n.
GameState advance(const GameState& state, Toss toss, const ProgressAutomaton& alice,
                  const ProgressAutomaton& bob);

// Throws std::invalid_argument for equal strings or unequal lengths.
PlayResult play(const TossString& alice, const TossString& bob);

// Same as play(), without recording the trace.
Outcome outcome_of(const TossString& alice, const TossString& bob);

std::vector<GameState> state_sequence(const TossString& alice, const TossString& bob);

// Independent classifier: runs the game up to the finite-game bound and calls
// it Infinite if nobody has won by then. Only the winner variant and winning
// toss count are meaningful (entry/period are left 0).
Outcome classify_by_cutoff(const TossString& alice, const TossString& bob);

}  // namespace noflip
