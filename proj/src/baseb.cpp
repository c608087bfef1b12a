#include "circfib/baseb.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "circfib/errors.hpp"

namespace circfib {

namespace {

void canonicalize_zero(std::vector<Digit>& digits, unsigned base) {
  if (std::all_of(digits.begin(), digits.end(), [&](Digit d) { return d == base - 1; }))
    std::fill(digits.begin(), digits.end(), 0);
}

BigInt modulus(unsigned base, std::size_t length) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(length)) - 1;
}

}  // namespace

BaseBWord::BaseBWord(std::vector<Digit> digits, unsigned base) : digits_(std::move(digits)), base_(base) {
  if (base < 2) throw domain_error("base must exceed 1");
  if (digits_.empty()) throw domain_error("empty base-b word");
  for (Digit d : digits_)
    if (d >= base) throw domain_error("digit " + std::to_string(d) + " not below base " + std::to_string(base));
}

BaseBWord BaseBWord::parse(const std::string& text, unsigned base) {
  const DigitWord w = DigitWord::parse(text);
  return BaseBWord(std::vector<Digit>(w.digits().begin(), w.digits().end()), base);
}

BaseBWord BaseBWord::from_value(const BigInt& value, std::size_t length, unsigned base) {
  const BigInt m = modulus(base, length);
  BigInt v = value % m;
  if (v < 0) v += m;
  std::vector<Digit> digits(length, 0);
  for (std::size_t i = length; i-- > 0;) {
    digits[i] = static_cast<Digit>(v % base);
    v /= base;
  }
  return BaseBWord(std::move(digits), base);
}

BigInt BaseBWord::value() const {
  BigInt v = 0;
  for (Digit d : digits_) v = v * base_ + d;
  return v;
}

bool BaseBWord::is_zero_class() const {
  return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; }) ||
         std::all_of(digits_.begin(), digits_.end(), [&](Digit d) { return d == base_ - 1; });
}

std::string BaseBWord::str() const { return DigitWord(digits_).str(); }

BaseBWord circ_add_base_b(const BaseBWord& u, const BaseBWord& v) {
  if (u.base() != v.base()) throw domain_error("circ_add_base_b: base mismatch");
  if (u.size() != v.size()) throw domain_error("circ_add_base_b: length mismatch");
  const unsigned b = u.base();
  std::vector<Digit> out(u.size());
  unsigned carry = 0;
  for (std::size_t i = u.size(); i-- > 0;) {
    const unsigned s = u.digits()[i] + v.digits()[i] + carry;
    out[i] = s % b;
    carry = s / b;
  }
  // End-around carry: it can propagate at most once more since the word is
  // then at most all (b-1).
  for (std::size_t i = out.size(); carry && i-- > 0;) {
    const unsigned s = out[i] + carry;
    out[i] = s % b;
    carry = s / b;
  }
  canonicalize_zero(out, b);
  return BaseBWord(std::move(out), b);
}

std::size_t multiplicative_order(unsigned base, std::uint64_t q) {
  if (q == 0) throw domain_error("multiplicative_order: q = 0");
  if (std::gcd<std::uint64_t>(base, q) != 1) throw domain_error("base and q are not coprime");
  if (q == 1) return 1;
  std::uint64_t x = base % q;
  std::size_t n = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * base) % q);
    ++n;
  }
  return n;
}

BaseBWord period_word(unsigned base, std::uint64_t q) {
  if (base < 2) throw domain_error("base must exceed 1");
  if (q == 0 || std::gcd<std::uint64_t>(base, q) != 1)
    throw domain_error("period_word: gcd(b, q) != 1, the expansion is not purely periodic");
  const std::size_t n = multiplicative_order(base, q);
  return BaseBWord::from_value(modulus(base, n) / q, n, base);
}

CyclicGroupReport verify_cyclic_group(unsigned base, std::uint64_t q) {
  BaseBWord pi = period_word(base, q);
  const std::size_t n = pi.size();
  CyclicGroupReport report{pi, {}, {}, true};
  BaseBWord acc(std::vector<Digit>(n, 0), base);
  const BigInt step = modulus(base, n) / q;
  for (std::uint64_t i = 1; i <= q; ++i) {
    acc = circ_add_base_b(acc, pi);
    report.multiples.push_back(acc);
    report.expected.push_back(BaseBWord::from_value(step * i, n, base));
    if (!(report.multiples.back() == report.expected.back())) report.passed = false;
  }
  if (!report.multiples.back().is_zero_class()) report.passed = false;
  return report;
}

bool check_isomorphism(unsigned base, std::size_t length) {
  const BigInt m = modulus(base, length);
  const auto count = static_cast<std::size_t>(m + 1);
  std::vector<BaseBWord> words;
  words.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Digit> digits(length);
    std::size_t c = code;
    for (std::size_t i = length; i-- > 0;) {
      digits[i] = static_cast<Digit>(c % base);
      c /= base;
    }
    words.emplace_back(std::move(digits), base);
  }
  // The map is well defined and onto: b^n words, the two spellings of zero collapse.
  std::set<BigInt> images;
  for (const auto& w : words) images.insert(w.value() % m);
  if (images.size() != static_cast<std::size_t>(m)) return false;
  for (const auto& u : words) {
    for (const auto& v : words) {
      const BaseBWord s = circ_add_base_b(u, v);
      if ((s.value() % m) != ((u.value() + v.value()) % m)) return false;
    }
  }
  return true;
}

}  // namespace circfib
