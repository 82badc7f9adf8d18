#include "noflip/forcing.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace noflip::forcing {

std::string to_string(Goal goal) {
  switch (goal) {
    case Goal::Win: return "win";
    case Goal::Loss: return "loss";
    case Goal::InfiniteGame: return "infinite";
  }
  return "?";
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Constructed: return "constructed";
    case Status::Impossible: return "impossible";
    case Status::UnknownByConstruction: return "unknown";
  }
  return "?";
}

OutcomeKind target_outcome(Player role, Goal goal) {
  switch (goal) {
    case Goal::Win:
      return role == Player::Alice ? OutcomeKind::AliceWins : OutcomeKind::BobWins;
    case Goal::Loss:
      return role == Player::Alice ? OutcomeKind::BobWins : OutcomeKind::AliceWins;
    case Goal::InfiniteGame: return OutcomeKind::Infinite;
  }
  return OutcomeKind::Infinite;
}

namespace {

constexpr char kSearch[] = "exhaustive-search";

Outcome play_as(Player role, const TossString& mine, const TossString& opponent) {
  return role == Player::Alice ? outcome_of(mine, opponent) : outcome_of(opponent, mine);
}

// A construction expressed for an H-first opponent.
struct Plan {
  Status status = Status::Constructed;
  std::string method;
  std::vector<TossString> candidates;  // tried in order
  std::optional<int> promised;
  bool has_free_tosses = false;  // failing candidates fall through to search
  bool search = false;

  static Plan impossible(std::string method) {
    Plan p;
    p.status = Status::Impossible;
    p.method = std::move(method);
    return p;
  }
  static Plan exact(std::string method, TossString s, std::optional<int> promised = {}) {
    Plan p;
    p.method = std::move(method);
    p.candidates = {s};
    p.promised = promised;
    return p;
  }
  // `stem` followed by `free` unconstrained tosses, filled with T, then H.
  static Plan with_free(std::string method, const TossString& stem, int free,
                        std::optional<int> promised) {
    Plan p;
    p.method = std::move(method);
    p.promised = promised;
    p.has_free_tosses = true;
    p.candidates = {stem + TossString::constant(Toss::T, free),
                    stem + TossString::constant(Toss::H, free)};
    return p;
  }
  static Plan fallback() {
    Plan p;
    p.search = true;
    return p;
  }
};

TossString opposite_constant(Toss letter, int n) {
  return TossString::constant(complement(letter), n);
}

// Pads `head` with T (or truncates it) to length n.
TossString padded(const char* head, int n) {
  TossString s = TossString::parse(head);
  if (s.length() >= n) return s.slice(1, n);
  return s + TossString::constant(Toss::T, n - s.length());
}

ForceResult realize(Player role, Goal goal, const TossString& opponent, const Plan& plan,
                    const ForceOptions& opts) {
  const bool flip = opponent.front() == Toss::T;
  const auto to_real = [flip](const TossString& s) { return flip ? s.complemented() : s; };
  const OutcomeKind want = target_outcome(role, goal);

  ForceResult result;
  result.status = plan.status;
  result.method = plan.method;
  if (plan.status == Status::Impossible) return result;

  if (!plan.search) {
    for (const TossString& normalized : plan.candidates) {
      const TossString mine = to_real(normalized);
      if (mine == opponent) continue;
      const Outcome o = play_as(role, mine, opponent);
      if (o.kind == want) {
        result.constructed = mine;
        result.verified_outcome = o;
        result.promised_tosses = plan.promised;
        return result;
      }
    }
    if (!plan.has_free_tosses) {
      throw std::logic_error("construction '" + plan.method + "' failed verification for " +
                             opponent.str());
    }
  }

  result.method = kSearch;
  result.promised_tosses.reset();
  if (opponent.length() > opts.search_cap) {
    result.status = Status::UnknownByConstruction;
    return result;
  }
  const auto found = search(role, goal, to_real(opponent));
  if (!found) {
    result.status = Status::Impossible;
    return result;
  }
  result.status = Status::Constructed;
  result.constructed = to_real(*found);
  result.verified_outcome = play_as(role, *result.constructed, opponent);
  return result;
}

TossString normalized(const TossString& s) {
  return s.front() == Toss::T ? s.complemented() : s;
}

Plan plan_bob_win(const TossString& a) {
  const int n = a.length();
  if (n == 1) return Plan::impossible("length-one-alice-always-wins");
  if (a.is_alternating()) {
    return Plan::exact("alternating-doubled-start", a.slice(1, 1) + a.slice(1, n - 1), n);
  }
  const int k = a.first_repeat();
  const TossString b = TossString::constant(complement(a.at(k)), 1) + a.slice(1, n - 1);
  return k % 2 == 1 ? Plan::exact("first-repeat-odd", b, n + 1)
                    : Plan::exact("first-repeat-even", b, n);
}

Plan plan_alice_win(const TossString& b) {
  const int n = b.length();
  TossString a = TossString::constant(complement(b.front()), 1);
  if (n > 1) a = a + b.slice(1, n - 1);
  return Plan::exact("complemented-first-then-shift", a, n);
}

Plan plan_infinite(const TossString& opp, int exception_max_length,
                   const char* alternating_head, const char* alternating_method) {
  const int n = opp.length();
  if (const int k = opp.first_repeat(); k != 0) {
    return Plan::exact("opposite-constant", opposite_constant(opp.at(k), n));
  }
  if (n <= exception_max_length) return Plan::impossible("short-alternating-exception");
  return Plan::exact(alternating_method, padded(alternating_head, n));
}

Plan plan_alice_loss(const TossString& b) {
  const int n = b.length();
  if (n % 2 == 1 && b.is_constant()) return Plan::impossible("odd-length-constant");
  if (n % 2 == 0) {
    return Plan::exact("same-but-last-letter", b.with(n, complement(b.at(n))), n);
  }
  if (b.at(2) != b.at(1)) {
    const int k = b.first_repeat();
    if (k == 0) {
      return Plan::exact("alternating-opposite-constant", opposite_constant(b.front(), n),
                         n + 1);
    }
    if (b.at(k) == b.front()) {
      return Plan::with_free("alternation-ends-in-first-letter", b.slice(3, n), 2, n);
    }
    return Plan::with_free("alternation-ends-in-second-letter", b.slice(2, n), 1, n + 1);
  }
  const int x = b.leading_run();
  if (x % 2 == 0) return Plan::with_free("even-leading-run", b.slice(2, n), 1, n);
  const Toss other_letter = complement(b.front());
  if (x + 2 <= n && b.at(x + 1) == other_letter && b.at(x + 2) == other_letter) {
    return Plan::with_free("odd-leading-run-then-double", b.slice(2, n), 1, x + n);
  }
  return Plan::fallback();
}

Plan plan_bob_loss(const TossString& a) {
  const int n = a.length();
  if (n % 2 == 0 && a.is_constant()) return Plan::impossible("even-length-constant");
  if (n % 2 == 1) {
    return Plan::exact("same-but-last-letter", a.with(n, complement(a.at(n))), n);
  }
  if (a.leading_run() % 2 == 1) {
    return Plan::with_free("odd-leading-run", a.slice(2, n), 1, n);
  }
  return Plan::fallback();
}

}  // namespace

std::optional<TossString> search(Player role, Goal goal, const TossString& opponent) {
  const int n = opponent.length();
  const OutcomeKind want = target_outcome(role, goal);
  const std::int64_t limit = std::int64_t{1} << n;
  std::int64_t best = limit;
#pragma omp parallel for reduction(min : best) schedule(dynamic, 64) if (n >= 10)
  for (std::int64_t v = 0; v < limit; ++v) {
    const TossString mine = TossString::from_bits(static_cast<std::uint64_t>(v), n);
    if (mine == opponent || v >= best) continue;
    if (play_as(role, mine, opponent).kind == want) best = v;
  }
  if (best == limit) return std::nullopt;
  return TossString::from_bits(static_cast<std::uint64_t>(best), n);
}

ForceResult bob_force_win(const TossString& alice, const ForceOptions& opts) {
  return realize(Player::Bob, Goal::Win, alice, plan_bob_win(normalized(alice)), opts);
}

ForceResult alice_force_win(const TossString& bob, const ForceOptions& opts) {
  return realize(Player::Alice, Goal::Win, bob, plan_alice_win(normalized(bob)), opts);
}

ForceResult bob_force_infinite(const TossString& alice, const ForceOptions& opts) {
  return realize(Player::Bob, Goal::InfiniteGame, alice,
                 plan_infinite(normalized(alice), 4, "HHTTT", "alternating-hhttt"), opts);
}

ForceResult alice_force_infinite(const TossString& bob, const ForceOptions& opts) {
  return realize(Player::Alice, Goal::InfiniteGame, bob,
                 plan_infinite(normalized(bob), 5, "THHTTT", "alternating-thhttt"), opts);
}

ForceResult alice_force_loss(const TossString& bob, const ForceOptions& opts) {
  return realize(Player::Alice, Goal::Loss, bob, plan_alice_loss(normalized(bob)), opts);
}

ForceResult bob_force_loss(const TossString& alice, const ForceOptions& opts) {
  return realize(Player::Bob, Goal::Loss, alice, plan_bob_loss(normalized(alice)), opts);
}

ForceResult force(Player role, Goal goal, const TossString& opponent,
                  const ForceOptions& opts) {
  const bool alice = role == Player::Alice;
  switch (goal) {
    case Goal::Win:
      return alice ? alice_force_win(opponent, opts) : bob_force_win(opponent, opts);
    case Goal::Loss:
      return alice ? alice_force_loss(opponent, opts) : bob_force_loss(opponent, opts);
    case Goal::InfiniteGame:
      return alice ? alice_force_infinite(opponent, opts) : bob_force_infinite(opponent, opts);
  }
  throw std::invalid_argument("unknown goal");
}

}  // namespace noflip::forcing
