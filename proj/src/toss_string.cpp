#include "noflip/toss_string.hpp"

namespace noflip {

TossString TossString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty toss string");
  if (text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw ParseError("toss string longer than " + std::to_string(kMaxLength) +
                     " characters");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != 'H' && c != 'T') {
      throw ParseError(std::string("invalid character '") + c +
                       "' in toss string (expected H or T)");
    }
    bits = (bits << 1) | (c == 'T' ? 1U : 0U);
  }
  return TossString(bits, static_cast<int>(text.size()));
}

TossString TossString::from_bits(std::uint64_t bits, int length) {
  if (length < 1 || length > kMaxLength) {
    throw std::invalid_argument("toss string length out of range");
  }
  TossString s(0, length);
  s.bits_ = bits & s.mask();
  return s;
}

TossString TossString::constant(Toss t, int length) {
  return from_bits(t == Toss::T ? ~0ULL : 0ULL, length);
}

TossString TossString::complemented() const noexcept {
  return TossString(~bits_ & mask(), length_);
}

TossString TossString::slice(int i, int j) const {
  if (i < 1 || j > length_ || i > j) {
    throw std::out_of_range("toss string slice out of range");
  }
  return from_bits(bits_ >> (length_ - j), j - i + 1);
}

TossString TossString::operator+(Toss t) const {
  return from_bits((bits_ << 1) | static_cast<std::uint64_t>(t), length_ + 1);
}

TossString TossString::operator+(const TossString& rhs) const {
  return from_bits((bits_ << rhs.length_) | rhs.bits_, length_ + rhs.length_);
}

TossString TossString::with(int i, Toss t) const {
  const std::uint64_t bit = 1ULL << (length_ - i);
  TossString s = *this;
  s.bits_ = t == Toss::T ? (bits_ | bit) : (bits_ & ~bit);
  return s;
}

bool TossString::is_constant() const noexcept {
  return bits_ == 0 || bits_ == mask();
}

bool TossString::is_alternating() const noexcept { return first_repeat() == 0; }

int TossString::leading_run() const noexcept {
  int run = 1;
  while (run < length_ && at(run + 1) == front()) ++run;
  return run;
}

int TossString::first_repeat() const noexcept {
  for (int k = 1; k < length_; ++k) {
    if (at(k) == at(k + 1)) return k;
  }
  return 0;
}

std::string TossString::str() const {
  std::string out(static_cast<std::size_t>(length_), 'H');
  for (int i = 1; i <= length_; ++i) out[static_cast<std::size_t>(i - 1)] = to_char(at(i));
  return out;
}

std::string to_string(const TossString& s) { return s.str(); }

}  // namespace noflip
