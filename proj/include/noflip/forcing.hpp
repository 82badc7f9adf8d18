#pragma once

#include <optional>
#include <string>

#include "noflip/game.hpp"
#include "noflip/toss_string.hpp"

namespace noflip::forcing {

enum class Goal { Win, Loss, InfiniteGame };

std::string to_string(Goal goal);  // "win" | "loss" | "infinite"

enum class Status { Constructed, Impossible, UnknownByConstruction };

std::string to_string(Status status);

struct ForceResult {
  Status status = Status::UnknownByConstruction;
  std::optional<TossString> constructed;
  // Which construction (or impossibility argument) produced the result, or
  // "exhaustive-search".
  std::string method;
  // The game played with the constructed string; present iff Constructed.
  std::optional<Outcome> verified_outcome;
  // Toss count the construction guarantees, when it guarantees one.
  std::optional<int> promised_tosses;
};

struct ForceOptions {
  // Largest n for which the exhaustive fallback is attempted.
  int search_cap = 16;
};

// Each function returns a verified string, a proof of impossibility, or
// UnknownByConstruction. A construction whose replay fails to reach the
// goal throws std::logic_error; it is never returned.
ForceResult bob_force_win(const TossString& alice, const ForceOptions& opts = {});
ForceResult alice_force_win(const TossString& bob, const ForceOptions& opts = {});
ForceResult bob_force_infinite(const TossString& alice, const ForceOptions& opts = {});
ForceResult alice_force_infinite(const TossString& bob, const ForceOptions& opts = {});
ForceResult alice_force_loss(const TossString& bob, const ForceOptions& opts = {});
ForceResult bob_force_loss(const TossString& alice, const ForceOptions& opts = {});

ForceResult force(Player role, Goal goal, const TossString& opponent,
                  const ForceOptions& opts = {});

// The outcome `role` is after when it pursues `goal`; Infinite for InfiniteGame.
OutcomeKind target_outcome(Player role, Goal goal);

// Lexicographically smallest string (H < T) that makes `role` reach `goal`
// against `opponent`, or nullopt if none exists.
std::optional<TossString> search(Player role, Goal goal, const TossString& opponent);

}  // namespace noflip::forcing
