#include "noflip/verify.hpp"

#include <array>
#include <functional>

#include "noflip/analysis.hpp"
#include "noflip/forcing.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace noflip::enumerate {

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Predicates: return "predicates";
    case Suite::Forcing: return "forcing";
    case Suite::Bound: return "bound";
    case Suite::Symmetry: return "symmetry";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Predicates, Suite::Forcing, Suite::Bound, Suite::Symmetry}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

struct RowResult {
  std::uint64_t checked = 0;
  std::vector<Violation> violations;

  void fail(std::string subject, std::string detail, std::string trace = {}) {
    violations.push_back({std::move(subject), std::move(detail), std::move(trace)});
  }
};

std::string pair_name(const TossString& a, const TossString& b) {
  return a.str() + " vs " + b.str();
}

bool is_forbidden(const GameState& s) {
  return (s.a == 0 && s.b == 0 && s.turn == Player::Bob) ||
         (s.a == 0 && s.b == 1 && s.turn == Player::Bob) ||
         (s.a == 1 && s.b == 0 && s.turn == Player::Alice);
}

// ---- bound -----------------------------------------------------------------

void check_bound(const TossString& a, const TossString& b, RowResult& row) {
  const int n = a.length();
  const int bound = finite_game_bound(n);
  const PlayResult r = play(a, b);
  const auto& states = r.trace.states;
  const std::string subject = pair_name(a, b);
  const std::string output = r.trace.output();

  if (r.outcome.finite() && r.outcome.tosses > bound) {
    row.fail(subject, "finite game longer than " + std::to_string(bound), output);
  }
  if (!r.outcome.finite() && r.outcome.entry + r.outcome.period > bound) {
    row.fail(subject, "repetition found after toss " + std::to_string(bound), output);
  }

  const Outcome cut = classify_by_cutoff(a, b);
  if (cut.kind != r.outcome.kind || (cut.finite() && cut.tosses != r.outcome.tosses)) {
    row.fail(subject, "cutoff classifier says " + describe(cut) + ", repetition says " +
                          describe(r.outcome), output);
  }

  if (states.size() != r.trace.tosses.size() + 1 || !(states.front() == GameState{})) {
    row.fail(subject, "malformed trace", output);
    return;
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    const GameState& s = states[i];
    if (is_forbidden(s)) row.fail(subject, "forbidden state " + to_string(s), output);
    if (s.k != static_cast<int>(i) || (s.turn == Player::Alice) != (s.k % 2 == 0)) {
      row.fail(subject, "turn/toss bookkeeping broken at toss " + std::to_string(i), output);
    }
    if (i == 0) continue;
    const GameState& prev = states[i - 1];
    const bool alice_moved = prev.turn == Player::Alice;
    const int before = alice_moved ? prev.a : prev.b;
    const int after = alice_moved ? s.a : s.b;
    if (after != before + 1) {
      row.fail(subject, "mover progress did not increase by one at toss " + std::to_string(i),
               output);
    }
  }
  if (!r.outcome.finite() &&
      !states.back().same_triplet(states[static_cast<std::size_t>(r.outcome.entry)])) {
    row.fail(subject, "reported cycle does not repeat", output);
  }
}

// ---- predicates ------------------------------------------------------------

void check_predicates(const TossString& a, const TossString& b, RowResult& row) {
  const auto predictions = analysis::predict_all(a, b);
  if (predictions.empty()) return;
  const PlayResult r = play(a, b);
  for (const auto& p : predictions) {
    if (analysis::consistent(p, r.outcome)) continue;
    std::string claim = analysis::to_string(p.rule) + " predicts " + to_string(p.kind);
    if (p.tosses) claim += " at toss " + std::to_string(*p.tosses);
    row.fail(pair_name(a, b), claim + ", game gives " + describe(r.outcome),
             r.trace.output());
  }
}

// ---- symmetry --------------------------------------------------------------

void check_symmetry(const TossString& a, const TossString& b, RowResult& row) {
  const PlayResult r = play(a, b);
  const PlayResult again = play(a, b);
  const PlayResult mirrored = play(a.complemented(), b.complemented());
  const std::string subject = pair_name(a, b);

  if (!(again.outcome == r.outcome) || again.trace.output() != r.trace.output() ||
      again.trace.states != r.trace.states) {
    row.fail(subject, "replay is not deterministic", r.trace.output());
  }
  if (!(mirrored.outcome == r.outcome)) {
    row.fail(subject, "complemented pair gives " + describe(mirrored.outcome) + " instead of " +
                          describe(r.outcome), r.trace.output());
  }
  std::string flipped = r.trace.output();
  for (char& c : flipped) c = c == 'H' ? 'T' : 'H';
  if (mirrored.trace.output() != flipped || mirrored.trace.states != r.trace.states) {
    row.fail(subject, "complemented trace differs: " + mirrored.trace.output(),
             r.trace.output());
  }
}

// ---- forcing ---------------------------------------------------------------

TossString normalized(const TossString& s) {
  return s.front() == Toss::T ? s.complemented() : s;
}

// Whether the known impossibility results say the goal is unreachable.
bool expected_impossible(Player role, forcing::Goal goal, const TossString& opponent) {
  const int n = opponent.length();
  const TossString s = normalized(opponent);
  switch (goal) {
    case forcing::Goal::Win: return role == Player::Bob && n == 1;
    case forcing::Goal::InfiniteGame:
      return s.is_alternating() && n <= (role == Player::Bob ? 4 : 5);
    case forcing::Goal::Loss:
      // Bob's no-loss set has no closed form; callers skip that case.
      return role == Player::Alice && n % 2 == 1 && s.is_constant();
  }
  return false;
}

void check_forcing(const TossString& opponent, RowResult& row) {
  const int n = opponent.length();
  const std::uint64_t size = std::uint64_t{1} << n;

  // Brute force: which outcomes each role can reach against this opponent.
  std::array<std::array<bool, 3>, 2> reachable{};
  for (std::uint64_t c = 0; c < size; ++c) {
    const TossString mine = TossString::from_bits(c, n);
    if (mine == opponent) continue;
    reachable[0][static_cast<std::size_t>(outcome_of(mine, opponent).kind)] = true;
    reachable[1][static_cast<std::size_t>(outcome_of(opponent, mine).kind)] = true;
  }

  for (Player role : {Player::Alice, Player::Bob}) {
    for (forcing::Goal goal :
         {forcing::Goal::Win, forcing::Goal::Loss, forcing::Goal::InfiniteGame}) {
      ++row.checked;
      const std::string subject = std::string(role == Player::Alice ? "alice" : "bob") + " " +
                                  forcing::to_string(goal) + " vs " + opponent.str();
      const OutcomeKind want = forcing::target_outcome(role, goal);
      const bool can = reachable[static_cast<std::size_t>(role)][static_cast<std::size_t>(want)];

      const auto res = forcing::force(role, goal, opponent);
      const auto mirror = forcing::force(role, goal, opponent.complemented());

      if (res.status == forcing::Status::UnknownByConstruction) {
        row.fail(subject, "no answer below the search cap");
        continue;
      }
      if ((res.status == forcing::Status::Impossible) == can) {
        row.fail(subject, res.method + " disagrees with brute force (reachable=" +
                              (can ? std::string("yes") : std::string("no")) + ")");
      }
      const bool bob_loss = role == Player::Bob && goal == forcing::Goal::Loss;
      if (!bob_loss && (res.status == forcing::Status::Impossible) !=
                           expected_impossible(role, goal, opponent)) {
        row.fail(subject, "impossibility does not match the exception list: " + res.method);
      }
      if (bob_loss && n % 2 == 0 && opponent.is_constant() &&
          res.status != forcing::Status::Impossible) {
        row.fail(subject, "even-length constant string must be impossible");
      }

      if (mirror.status != res.status || mirror.method != res.method ||
          mirror.constructed.has_value() != res.constructed.has_value() ||
          (res.constructed && *mirror.constructed != res.constructed->complemented())) {
        row.fail(subject, "complement covariance broken (" + res.method + " vs " +
                              mirror.method + ")");
      }

      if (res.status != forcing::Status::Constructed) continue;
      const TossString& mine = *res.constructed;
      const PlayResult replay =
          role == Player::Alice ? play(mine, opponent) : play(opponent, mine);
      const std::string trace = replay.trace.output();
      if (mine == opponent || replay.outcome.kind != want ||
          !(res.verified_outcome && *res.verified_outcome == replay.outcome)) {
        row.fail(subject, mine.str() + " does not reach the goal: " + describe(replay.outcome),
                 trace);
        continue;
      }
      if (res.promised_tosses && *res.promised_tosses != replay.outcome.tosses) {
        row.fail(subject, res.method + " promised toss " + std::to_string(*res.promised_tosses) +
                              ", got " + std::to_string(replay.outcome.tosses), trace);
      }
      if (goal == forcing::Goal::Win && role == Player::Bob && replay.outcome.tosses >= n + 2) {
        row.fail(subject, "Bob's win took " + std::to_string(replay.outcome.tosses) + " tosses",
                 trace);
      }
      if (goal == forcing::Goal::Win && role == Player::Alice && replay.outcome.tosses != n) {
        row.fail(subject, "Alice's win took " + std::to_string(replay.outcome.tosses) +
                              " tosses", trace);
      }
    }
  }
}

int thread_count(const SweepOptions& opts) {
#ifdef _OPENMP
  return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
  (void)opts;
  return 1;
#endif
}

}  // namespace

VerifyReport verify_suite(int n, Suite suite, const SweepOptions& opts) {
  check_sweep_length(n);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::vector<RowResult> rows(static_cast<std::size_t>(count));

  std::function<void(const TossString&, const TossString&, RowResult&)> pair_check;
  switch (suite) {
    case Suite::Bound: pair_check = check_bound; break;
    case Suite::Predicates: pair_check = check_predicates; break;
    case Suite::Symmetry: pair_check = check_symmetry; break;
    case Suite::Forcing: break;
  }

#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count(opts))
  for (std::int64_t i = 0; i < count; ++i) {
    RowResult& row = rows[static_cast<std::size_t>(i)];
    const TossString a = TossString::from_bits(static_cast<std::uint64_t>(i), n);
    if (suite == Suite::Forcing) {
      check_forcing(a, row);
      continue;
    }
    for (std::int64_t j = 0; j < count; ++j) {
      if (i == j) continue;
      ++row.checked;
      pair_check(a, TossString::from_bits(static_cast<std::uint64_t>(j), n), row);
    }
  }

  VerifyReport report;
  report.suite = suite;
  report.n = n;
  for (auto& row : rows) {
    report.checked += row.checked;
    for (auto& v : row.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace noflip::enumerate
