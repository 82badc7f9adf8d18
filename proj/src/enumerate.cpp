#include "noflip/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "kernel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace noflip::enumerate {

namespace kernel = noflip::kernel;

double OutcomeCensus::proportion(OutcomeKind kind) const {
  if (total == 0) return 0.0;
  const std::uint64_t count = kind == OutcomeKind::AliceWins ? alice_wins
                              : kind == OutcomeKind::BobWins ? bob_wins
                                                             : infinite;
  return static_cast<double>(count) / static_cast<double>(total);
}

int sweep_cap() {
  if (const char* env = std::getenv("NOFLIP_SWEEP_CAP")) {
    const std::string_view text(env);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value >= 1 &&
        value <= TossString::kMaxLength) {
      return value;
    }
  }
  return kDefaultSweepCap;
}

void check_sweep_length(int n) {
  const int cap = sweep_cap();
  if (n < 1 || n > cap) {
    throw std::out_of_range("string length " + std::to_string(n) + " outside 1.." +
                            std::to_string(cap));
  }
}

namespace {

int thread_count(const SweepOptions& opts) {
#ifdef _OPENMP
  return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
  (void)opts;
  return 1;
#endif
}

TossString str(std::uint64_t bits, int n) { return TossString::from_bits(bits, n); }

}  // namespace

OutcomeCensus census(int n, const SweepOptions& opts) {
  check_sweep_length(n);
  const kernel::AutomatonBank bank(n);
  const auto count = static_cast<std::int64_t>(bank.size());
  std::uint64_t alice = 0, bob = 0, inf = 0;

#pragma omp parallel num_threads(thread_count(opts)) reduction(+ : alice, bob, inf)
  {
    kernel::VisitTable visits(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
      for (std::int64_t j = 0; j < count; ++j) {
        if (i == j) continue;
        switch (kernel::fast_play(bank, static_cast<std::uint64_t>(i),
                                  static_cast<std::uint64_t>(j), visits)
                    .kind) {
          case OutcomeKind::AliceWins: ++alice; break;
          case OutcomeKind::BobWins: ++bob; break;
          case OutcomeKind::Infinite: ++inf; break;
        }
      }
    }
  }

  OutcomeCensus c;
  c.n = n;
  c.total = bank.size() * (bank.size() - 1);
  c.alice_wins = alice;
  c.bob_wins = bob;
  c.infinite = inf;
  return c;
}

LengthStats longest_finite(int n, const SweepOptions& opts) {
  check_sweep_length(n);
  const kernel::AutomatonBank bank(n);
  const auto count = static_cast<std::int64_t>(bank.size());

  // Each Alice row records its own maximum and witnesses; rows are merged
  // in index order afterwards so the result does not depend on scheduling.
  std::vector<int> row_max(static_cast<std::size_t>(count), 0);
  std::vector<std::vector<std::uint64_t>> row_witnesses(static_cast<std::size_t>(count));

#pragma omp parallel num_threads(thread_count(opts))
  {
    kernel::VisitTable visits(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
      auto& best = row_max[static_cast<std::size_t>(i)];
      auto& wit = row_witnesses[static_cast<std::size_t>(i)];
      for (std::int64_t j = 0; j < count; ++j) {
        if (i == j) continue;
        const auto r = kernel::fast_play(bank, static_cast<std::uint64_t>(i),
                                         static_cast<std::uint64_t>(j), visits);
        if (r.kind == OutcomeKind::Infinite || r.tosses < best) continue;
        if (r.tosses > best) {
          best = r.tosses;
          wit.clear();
        }
        wit.push_back(static_cast<std::uint64_t>(j));
      }
    }
  }

  LengthStats stats;
  stats.n = n;
  stats.max_finite_tosses = *std::max_element(row_max.begin(), row_max.end());
  for (std::int64_t i = 0; i < count; ++i) {
    if (row_max[static_cast<std::size_t>(i)] != stats.max_finite_tosses) continue;
    for (std::uint64_t j : row_witnesses[static_cast<std::size_t>(i)]) {
      stats.argmax_pairs.emplace_back(str(static_cast<std::uint64_t>(i), n), str(j, n));
    }
  }
  return stats;
}

std::vector<TossString> no_loss_strings(int n, const SweepOptions& opts) {
  check_sweep_length(n);
  const kernel::AutomatonBank bank(n);
  // H-first strings are exactly the lower half of the index range.
  const auto half = static_cast<std::int64_t>(bank.size() / 2);
  std::vector<char> no_loss(static_cast<std::size_t>(half), 0);

#pragma omp parallel num_threads(thread_count(opts))
  {
    kernel::VisitTable visits(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < half; ++i) {
      if (i == 0) continue;  // all H
      bool bob_can_lose = false;
      for (std::uint64_t j = 0; j < bank.size() && !bob_can_lose; ++j) {
        if (j == static_cast<std::uint64_t>(i)) continue;
        bob_can_lose = kernel::fast_play(bank, static_cast<std::uint64_t>(i), j, visits).kind ==
                       OutcomeKind::AliceWins;
      }
      no_loss[static_cast<std::size_t>(i)] = bob_can_lose ? 0 : 1;
    }
  }

  std::vector<TossString> out;
  for (std::int64_t i = 0; i < half; ++i) {
    if (no_loss[static_cast<std::size_t>(i)]) out.push_back(str(static_cast<std::uint64_t>(i), n));
  }
  return out;
}

namespace reference {

OutcomeCensus census(int n) {
  check_sweep_length(n);
  OutcomeCensus c;
  c.n = n;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < size; ++i) {
    for (std::uint64_t j = 0; j < size; ++j) {
      if (i == j) continue;
      ++c.total;
      switch (outcome_of(str(i, n), str(j, n)).kind) {
        case OutcomeKind::AliceWins: ++c.alice_wins; break;
        case OutcomeKind::BobWins: ++c.bob_wins; break;
        case OutcomeKind::Infinite: ++c.infinite; break;
      }
    }
  }
  return c;
}

LengthStats longest_finite(int n) {
  check_sweep_length(n);
  LengthStats stats;
  stats.n = n;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < size; ++i) {
    for (std::uint64_t j = 0; j < size; ++j) {
      if (i == j) continue;
      const Outcome o = outcome_of(str(i, n), str(j, n));
      if (!o.finite() || o.tosses < stats.max_finite_tosses) continue;
      if (o.tosses > stats.max_finite_tosses) {
        stats.max_finite_tosses = o.tosses;
        stats.argmax_pairs.clear();
      }
      stats.argmax_pairs.emplace_back(str(i, n), str(j, n));
    }
  }
  return stats;
}

std::vector<TossString> no_loss_strings(int n) {
  check_sweep_length(n);
  std::vector<TossString> out;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < size; ++i) {
    const TossString a = str(i, n);
    if (a.front() != Toss::H || a.is_constant()) continue;
    bool bob_can_lose = false;
    for (std::uint64_t j = 0; j < size && !bob_can_lose; ++j) {
      if (i != j) bob_can_lose = outcome_of(a, str(j, n)).kind == OutcomeKind::AliceWins;
    }
    if (!bob_can_lose) out.push_back(a);
  }
  return out;
}

}  // namespace reference

}  // namespace noflip::enumerate
