#ifndef CIRCFIB_FIBCORE_HPP
#define CIRCFIB_FIBCORE_HPP

// Fibonacci numbers, digit words and the Fibonacci word over {a, b}.
//
// Conventions: F_0 = 1, F_1 = 2, F_k = F_{k-1} + F_{k-2}, extended backward
// with F_{-1} = 1 and F_{-2} = 0. Words are written left to right, index 0
// is the leftmost and least significant digit.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace circfib {

using BigInt = boost::multiprecision::cpp_int;
using Digit = std::uint32_t;

/// F_k for k >= -2 (F_0 = 1, F_1 = 2). Throws a domain error for k < -2.
BigInt fib(int k);

/// The classical sequence f_0 = 0, f_1 = f_2 = 1.
BigInt classical_fib(int n);

/// Finite nonempty sequence of nonnegative digits.
class DigitWord {
 public:
  explicit DigitWord(std::vector<Digit> digits);
  DigitWord(std::size_t length, Digit fill);

  /// Accepts "010010" or, for digits above 9, "0,12,3".
  static DigitWord parse(std::string_view text);

  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  Digit& operator[](std::size_t i) { return digits_[i]; }
  std::span<const Digit> digits() const noexcept { return digits_; }

  Digit max_digit() const;
  bool is_zero() const;
  bool is_binary() const;

  /// Contiguous digits when every digit is at most 9, comma separated otherwise.
  std::string str() const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
  friend auto operator<=>(const DigitWord&, const DigitWord&) = default;

 private:
  std::vector<Digit> digits_;
};

/// A digit word read cyclically from a fixed origin. Equality is positional,
/// so 1000 and 0001 are different circular words.
class CircWord {
 public:
  explicit CircWord(DigitWord word) : word_(std::move(word)) {}
  explicit CircWord(std::vector<Digit> digits) : word_(std::move(digits)) {}
  static CircWord parse(std::string_view text) { return CircWord(DigitWord::parse(text)); }

  std::size_t size() const noexcept { return word_.size(); }
  Digit operator[](std::size_t i) const { return word_[i]; }
  Digit& operator[](std::size_t i) { return word_[i]; }

  /// Cyclic access; any integer index is reduced modulo the length.
  Digit at(std::ptrdiff_t i) const { return word_[wrap(i)]; }
  Digit& at(std::ptrdiff_t i) { return word_[wrap(i)]; }
  std::size_t wrap(std::ptrdiff_t i) const noexcept {
    const auto n = static_cast<std::ptrdiff_t>(size());
    return static_cast<std::size_t>(((i % n) + n) % n);
  }

  const DigitWord& linear() const noexcept { return word_; }
  std::span<const Digit> digits() const noexcept { return word_.digits(); }
  std::string str() const { return word_.str(); }

  friend bool operator==(const CircWord&, const CircWord&) = default;
  friend auto operator<=>(const CircWord&, const CircWord&) = default;

 private:
  DigitWord word_;
};

/// (01)^(n/2) for even n, the words used for the group identity.
CircWord alternating_word(std::size_t n, Digit first);

BigInt valuation(const DigitWord& w);
inline BigInt valuation(const CircWord& w) { return valuation(w.linear()); }

/// Greedy Zeckendorf expansion of n on len digits (no two adjacent 1s in the
/// linear reading). Throws a capacity error when n >= F_len.
DigitWord zeckendorf(const BigInt& n, std::size_t len);

/// Binary and no two cyclically adjacent 1s, the wrap pair included.
bool is_admissible(const CircWord& w);

/// sigma: the last digit moves to the front.
CircWord rotate(const CircWord& w);
CircWord rotate(const CircWord& w, std::ptrdiff_t times);

/// Word over the alphabet {a, b}.
class LetterWord {
 public:
  LetterWord() = default;
  explicit LetterWord(std::string letters);

  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& str() const noexcept { return letters_; }
  LetterWord substr(std::size_t pos, std::size_t len) const;

  friend bool operator==(const LetterWord&, const LetterWord&) = default;

 private:
  std::string letters_;
};

struct LetterCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

/// Prefix of length n of the fixed point of a -> ab, b -> a.
LetterWord fibonacci_word_prefix(std::size_t n);

LetterCounts letter_counts(const LetterWord& w);

/// Whether all factors of the given length have a-counts within 1 of each other.
bool check_balanced(const LetterWord& w, std::size_t window);

}  // namespace circfib

#endif  // CIRCFIB_FIBCORE_HPP
