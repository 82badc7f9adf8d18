#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace noflip {

enum class Toss : std::uint8_t { H = 0, T = 1 };

constexpr Toss complement(Toss t) noexcept {
  return t == Toss::H ? Toss::T : Toss::H;
}

constexpr char to_char(Toss t) noexcept { return t == Toss::H ? 'H' : 'T'; }

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A player's chosen string of H/T, packed into one word.
//
// Position i (1-based) lives at bit (length - i), so comparing two strings of
// equal length by their packed value is the lexicographic order with H < T.
class TossString {
 public:
  static constexpr int kMaxLength = 63;

  TossString() = default;

  // Throws ParseError on empty input, a character other than 'H'/'T', or
  // more than kMaxLength characters.
  static TossString parse(std::string_view text);

  // Builds the string whose packed value is `bits`; only the low `length`
  // bits are used.
  static TossString from_bits(std::uint64_t bits, int length);

  static TossString constant(Toss t, int length);

  int length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }

  // 1-based access.
  Toss at(int i) const noexcept {
    return static_cast<Toss>((bits_ >> (length_ - i)) & 1U);
  }
  Toss front() const noexcept { return at(1); }
  Toss back() const noexcept { return at(length_); }

  TossString complemented() const noexcept;

  // Characters i..j inclusive, 1-based. Empty ranges are not representable;
  // callers must ensure i <= j.
  TossString slice(int i, int j) const;

  TossString operator+(Toss t) const;
  TossString operator+(const TossString& rhs) const;

  // Copy with position i replaced.
  TossString with(int i, Toss t) const;

  bool is_constant() const noexcept;
  bool is_alternating() const noexcept;

  // Length of the maximal run of front() at the start of the string.
  int leading_run() const noexcept;

  // Smallest 1-based k with at(k) == at(k + 1), or 0 when the string alternates.
  int first_repeat() const noexcept;

  std::string str() const;

  friend bool operator==(const TossString&, const TossString&) = default;
  friend std::strong_ordering operator<=>(const TossString& a,
                                          const TossString& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  TossString(std::uint64_t bits, int length) : bits_(bits), length_(length) {}

  std::uint64_t mask() const noexcept {
    return length_ == 64 ? ~0ULL : ((1ULL << length_) - 1);
  }

  std::uint64_t bits_ = 0;
  int length_ = 0;
};

std::string to_string(const TossString& s);

}  // namespace noflip
