#ifndef CIRCFIB_BASEB_HPP
#define CIRCFIB_BASEB_HPP

// Circular words in an integer base b, written most significant digit first
// (ordinary decimal notation). Adding two words is ordinary addition except
// that the carry out of the leftmost digit re-enters on the right, which makes
// the words of length n a copy of Z/(b^n - 1)Z. The all-(b-1) word is the
// zero class and is always returned as the all-zero word.

#include <cstdint>
#include <string>
#include <vector>

#include "circfib/fibcore.hpp"

namespace circfib {

class BaseBWord {
 public:
  BaseBWord(std::vector<Digit> digits, unsigned base);
  static BaseBWord parse(const std::string& text, unsigned base);
  /// Digits of value mod (b^n - 1) on n places, zero class canonical.
  static BaseBWord from_value(const BigInt& value, std::size_t length, unsigned base);

  unsigned base() const noexcept { return base_; }
  std::size_t size() const noexcept { return digits_.size(); }
  const std::vector<Digit>& digits() const noexcept { return digits_; }

  /// Plain positional value, most significant digit first.
  BigInt value() const;
  bool is_zero_class() const;
  std::string str() const;

  friend bool operator==(const BaseBWord&, const BaseBWord&) = default;

 private:
  std::vector<Digit> digits_;
  unsigned base_;
};

BaseBWord circ_add_base_b(const BaseBWord& u, const BaseBWord& v);

/// Period of the base-b expansion of 1/q, leading zeros kept. q = 1 gives the zero word.
BaseBWord period_word(unsigned base, std::uint64_t q);

/// Least n >= 1 with b^n = 1 mod q.
std::size_t multiplicative_order(unsigned base, std::uint64_t q);

struct CyclicGroupReport {
  BaseBWord period;
  std::vector<BaseBWord> multiples;  // i * Pi by repeated addition, i = 1..q
  std::vector<BaseBWord> expected;   // digits of i * N(Pi)
  bool passed = false;
};

CyclicGroupReport verify_cyclic_group(unsigned base, std::uint64_t q);

/// Exhaustive check that word -> value mod (b^n - 1) is a group isomorphism
/// from the circular words of length n onto Z/(b^n - 1)Z.
bool check_isomorphism(unsigned base, std::size_t length);

}  // namespace circfib

#endif  // CIRCFIB_BASEB_HPP
