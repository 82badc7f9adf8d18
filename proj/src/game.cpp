#include "noflip/game.hpp"

#include <stdexcept>

namespace noflip {

namespace {

void check_pair(const TossString& alice, const TossString& bob) {
  if (alice.length() != bob.length()) {
    throw std::invalid_argument("strings must have the same length");
  }
  if (alice == bob) throw std::invalid_argument("strings must be distinct");
}

std::size_t triplet_index(const GameState& s, int n) {
  return (static_cast<std::size_t>(s.a) * static_cast<std::size_t>(n + 1) +
          static_cast<std::size_t>(s.b)) * 2 +
         static_cast<std::size_t>(s.turn);
}

template <typename OnState>
Outcome run(const TossString& alice, const TossString& bob, OnState&& on_state) {
  check_pair(alice, bob);
  const int n = alice.length();
  const ProgressAutomaton auto_a(alice);
  const ProgressAutomaton auto_b(bob);

  // Toss count at which each triplet was first seen, or -1.
  std::vector<int> seen(static_cast<std::size_t>(2 * (n + 1) * (n + 1)), -1);
  GameState state;
  for (;;) {
    int& first = seen[triplet_index(state, n)];
    if (first >= 0) return Outcome::infinite(first, state.k - first);
    first = state.k;

    const Toss t = next_choice(state, state.turn == Player::Alice ? alice : bob);
    state = advance(state, t, auto_a, auto_b);
    on_state(t, state);
    if (state.a == n) return Outcome::alice_wins(state.k);
    if (state.b == n) return Outcome::bob_wins(state.k);
  }
}

}  // namespace

std::string to_string(const GameState& s) {
  return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," +
         to_char(s.turn) + ")";
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::AliceWins: return "AliceWins";
    case OutcomeKind::BobWins: return "BobWins";
    case OutcomeKind::Infinite: return "Infinite";
  }
  return "?";
}

std::string describe(const Outcome& o) {
  if (o.finite()) return to_string(o.kind) + " at toss " + std::to_string(o.tosses);
  return "Infinite (entry " + std::to_string(o.entry) + ", period " +
         std::to_string(o.period) + ")";
}

std::string GameTrace::output() const {
  std::string s;
  s.reserve(tosses.size());
  for (Toss t : tosses) s.push_back(to_char(t));
  return s;
}

Toss next_choice(const GameState& state, const TossString& mover) {
  const int p = state.turn == Player::Alice ? state.a : state.b;
  if (p >= mover.length()) throw std::logic_error("game already ended");
  return mover.at(p + 1);
}

GameState advance(const GameState& state, Toss toss, const ProgressAutomaton& alice,
                  const ProgressAutomaton& bob) {
  if (state.a >= alice.length() || state.b >= bob.length()) {
    throw std::logic_error("game already ended");
  }
  return GameState{alice.next(state.a, toss), bob.next(state.b, toss), other(state.turn),
                   state.k + 1};
}

PlayResult play(const TossString& alice, const TossString& bob) {
  PlayResult result;
  result.trace.states.emplace_back();
  result.outcome = run(alice, bob, [&](Toss t, const GameState& s) {
    result.trace.tosses.push_back(t);
    result.trace.states.push_back(s);
  });
  return result;
}

Outcome outcome_of(const TossString& alice, const TossString& bob) {
  return run(alice, bob, [](Toss, const GameState&) {});
}

std::vector<GameState> state_sequence(const TossString& alice, const TossString& bob) {
  return play(alice, bob).trace.states;
}

Outcome classify_by_cutoff(const TossString& alice, const TossString& bob) {
  check_pair(alice, bob);
  const int n = alice.length();
  const ProgressAutomaton auto_a(alice);
  const ProgressAutomaton auto_b(bob);
  GameState state;
  while (state.k < finite_game_bound(n)) {
    const Toss t = next_choice(state, state.turn == Player::Alice ? alice : bob);
    state = advance(state, t, auto_a, auto_b);
    if (state.a == n) return Outcome::alice_wins(state.k);
    if (state.b == n) return Outcome::bob_wins(state.k);
  }
  return Outcome::infinite(0, 0);
}

}  // namespace noflip
