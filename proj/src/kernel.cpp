#include "kernel.hpp"

#include <stdexcept>

namespace noflip::kernel {

AutomatonBank::AutomatonBank(int n) : n_(n) {
  if (n < 1 || n > 24) throw std::out_of_range("automaton bank length out of range");
  table_.resize(size() * static_cast<std::uint64_t>(2 * n));
  for (std::uint64_t s = 0; s < size(); ++s) {
    const ProgressAutomaton automaton(TossString::from_bits(s, n));
    std::uint8_t* out = table_.data() + s * static_cast<std::uint64_t>(2 * n);
    for (int state = 0; state < n; ++state) {
      out[2 * state] = static_cast<std::uint8_t>(automaton.next(state, Toss::H));
      out[2 * state + 1] = static_cast<std::uint8_t>(automaton.next(state, Toss::T));
    }
  }
}

}  // namespace noflip::kernel
