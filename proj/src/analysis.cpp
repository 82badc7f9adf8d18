#include "noflip/analysis.hpp"

#include <algorithm>

namespace noflip::analysis {

RunProfile::RunProfile(const TossString& source) : source_(source) {
  const int n = source.length();
  h_.reserve(static_cast<std::size_t>(n));
  t_.reserve(static_cast<std::size_t>(n));
  int run_h = 0, run_t = 0, best_h = 0, best_t = 0;
  for (int i = 1; i <= n; ++i) {
    if (source.at(i) == Toss::H) {
      ++run_h;
      run_t = 0;
    } else {
      ++run_t;
      run_h = 0;
    }
    best_h = std::max(best_h, run_h);
    best_t = std::max(best_t, run_t);
    h_.push_back(best_h);
    t_.push_back(best_t);
  }
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::LongestRuns: return "longest-runs";
    case Rule::CommonPrefix: return "common-prefix";
    case Rule::ShiftByOne: return "shift-by-one";
    case Rule::ShiftByTwo: return "shift-by-two";
    case Rule::AliceConstant: return "alice-constant";
    case Rule::BobConstant: return "bob-constant";
    case Rule::AlternatingVsDouble: return "alternating-vs-double";
  }
  return "?";
}

namespace {

bool valid_pair(const TossString& a, const TossString& b) {
  return a.length() == b.length() && a != b;
}

// Every position of the given parity (1 = odd, 0 = even) holds `letter`.
bool letter_at_parity(const TossString& s, Toss letter, int parity) {
  for (int i = 1; i <= s.length(); ++i) {
    if (i % 2 == parity && s.at(i) != letter) return false;
  }
  return true;
}

bool starts_with_double(const TossString& s, Toss letter) {
  return s.length() >= 2 && s.at(1) == letter && s.at(2) == letter;
}

Prediction make(Rule rule, OutcomeKind kind, std::optional<int> tosses = std::nullopt) {
  return Prediction{rule, kind, tosses};
}

std::optional<Prediction> common_prefix(const TossString& a, const TossString& b) {
  const int n = a.length();
  if (a.with(n, b.at(n)) != b) return std::nullopt;
  // Synchronized for n - 1 tosses; whoever moves on toss n finishes.
  return make(Rule::CommonPrefix, n % 2 == 0 ? OutcomeKind::BobWins : OutcomeKind::AliceWins, n);
}

std::optional<Prediction> shift_by_one(const TossString& a, const TossString& b) {
  const int n = a.length();
  if (n < 2) return std::nullopt;
  const Toss x = a.front();
  if (a.at(2) == x || b.at(1) != x || b.at(2) != x) return std::nullopt;
  if (b.slice(2, n) != a.slice(1, n - 1)) return std::nullopt;
  return make(Rule::ShiftByOne, OutcomeKind::BobWins, n);
}

std::optional<Prediction> shift_by_two(const TossString& a, const TossString& b) {
  const int n = a.length();
  if (n < 4) return std::nullopt;
  const Toss x = a.front();
  if (a.at(2) != x || b.at(1) != x || b.at(2) == x) return std::nullopt;
  if (b.slice(3, n) != a.slice(1, n - 2)) return std::nullopt;
  return make(Rule::ShiftByTwo, OutcomeKind::BobWins, n);
}

std::optional<Prediction> alice_constant(const TossString& a, const TossString& b) {
  if (!a.is_constant()) return std::nullopt;
  const int n = a.length();
  const Toss x = a.front();
  if (n % 2 == 1 && b == a.with(n, complement(x))) {
    return make(Rule::AliceConstant, OutcomeKind::AliceWins, n);
  }
  if (letter_at_parity(b, x, 1)) return make(Rule::AliceConstant, OutcomeKind::BobWins, n);
  if (letter_at_parity(b, x, 0)) return make(Rule::AliceConstant, OutcomeKind::BobWins, n + 1);
  return make(Rule::AliceConstant, OutcomeKind::Infinite);
}

std::optional<Prediction> bob_constant(const TossString& a, const TossString& b) {
  if (!b.is_constant()) return std::nullopt;
  const int n = b.length();
  const Toss x = b.front();
  if (n % 2 == 0 && a == b.with(n, complement(x))) {
    return make(Rule::BobConstant, OutcomeKind::BobWins, n);
  }
  if (letter_at_parity(a, x, 0)) return make(Rule::BobConstant, OutcomeKind::AliceWins, n);
  if (letter_at_parity(a, x, 1)) return make(Rule::BobConstant, OutcomeKind::AliceWins, n + 1);
  return make(Rule::BobConstant, OutcomeKind::Infinite);
}

std::optional<Prediction> alternating_vs_double(const TossString& a, const TossString& b) {
  if (a.length() < 2) return std::nullopt;
  const int n = a.length();
  if (a.is_alternating() && starts_with_double(b, complement(a.front()))) {
    return make(Rule::AlternatingVsDouble, OutcomeKind::AliceWins, n);
  }
  // Alice's first toss is wasted on Bob, hence one extra move.
  if (b.is_alternating() && starts_with_double(a, complement(b.front()))) {
    return make(Rule::AlternatingVsDouble, OutcomeKind::BobWins, n + 1);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Prediction> predict_by_runs(const TossString& alice, const TossString& bob) {
  if (!valid_pair(alice, bob)) return std::nullopt;
  const RunProfile pa(alice), pb(bob);
  for (int p = 1; p <= alice.length(); ++p) {
    const bool bob_blocked_on_h = pa.h(p) + 1 < pb.h(p) && pb.t(p) + 1 < pa.t(p);
    const bool alice_blocked_on_h = pb.h(p) + 1 < pa.h(p) && pa.t(p) + 1 < pb.t(p);
    if (bob_blocked_on_h || alice_blocked_on_h) {
      return make(Rule::LongestRuns, OutcomeKind::Infinite);
    }
  }
  return std::nullopt;
}

std::optional<Prediction> predict_large_overlap(const TossString& alice,
                                                const TossString& bob) {
  if (!valid_pair(alice, bob)) return std::nullopt;
  if (auto p = common_prefix(alice, bob)) return p;
  // Shift rules are written against Alice's first letter, so the T-first
  // (complemented) shapes are covered too.
  if (auto p = shift_by_one(alice, bob)) return p;
  if (auto p = shift_by_two(alice, bob)) return p;
  return std::nullopt;
}

std::optional<Prediction> predict_special_strings(const TossString& alice,
                                                  const TossString& bob) {
  if (!valid_pair(alice, bob)) return std::nullopt;
  if (auto p = alice_constant(alice, bob)) return p;
  if (auto p = bob_constant(alice, bob)) return p;
  return alternating_vs_double(alice, bob);
}

std::vector<Prediction> predict_all(const TossString& alice, const TossString& bob) {
  std::vector<Prediction> out;
  if (!valid_pair(alice, bob)) return out;
  for (auto p : {predict_by_runs(alice, bob), common_prefix(alice, bob),
                 shift_by_one(alice, bob), shift_by_two(alice, bob),
                 alice_constant(alice, bob), bob_constant(alice, bob),
                 alternating_vs_double(alice, bob)}) {
    if (p) out.push_back(*p);
  }
  return out;
}

bool consistent(const Prediction& p, const Outcome& actual) {
  if (p.kind != actual.kind) return false;
  return !p.tosses || *p.tosses == actual.tosses;
}

}  // namespace noflip::analysis
