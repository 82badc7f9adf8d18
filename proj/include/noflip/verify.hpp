#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noflip/enumerate.hpp"

namespace noflip::enumerate {

enum class Suite { Predicates, Forcing, Bound, Symmetry };

std::string to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct Violation {
  std::string subject;  // "HHTT vs THHH", or the opponent string for forcing
  std::string detail;
  std::string trace;    // game output, when a game is involved
};

struct VerifyReport {
  Suite suite{};
  int n = 0;
  std::uint64_t checked = 0;  // pairs (or opponent/role/goal cases) examined
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Exhaustive property sweep over every ordered pair (or, for Forcing, every
// opponent string, both roles and all three goals) of length n.
VerifyReport verify_suite(int n, Suite suite, const SweepOptions& opts = {});

}  // namespace noflip::enumerate
