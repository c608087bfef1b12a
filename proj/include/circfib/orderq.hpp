#ifndef CIRCFIB_ORDERQ_HPP
#define CIRCFIB_ORDERQ_HPP

// Admissible circular words of order dividing q, across even lengths, with
// W identified to W^n. Elements are materialized at the minimal even length
// 2l for which the q-torsion lives in G*_l; the primitive period is carried
// alongside.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "circfib/group.hpp"

namespace circfib {

inline constexpr std::size_t kDefaultMaxPeriodicEll = 12;

/// Least even n >= 2 with F_n = F_{n-1} = 1 mod q.
std::size_t minimal_even_length(std::uint64_t q);

/// 2 min{l : q divides d_l}; nullopt if no such l <= ell_limit.
std::optional<std::size_t> minimal_even_length_via_d(std::uint64_t q, std::size_t ell_limit = 400);

struct PiWords {
  GroupElement pi;
  GroupElement pi_prime;
  BigInt pi_value;        // (F_n - 1) / q
  BigInt pi_prime_value;  // (F_{n-1} - 1) / q
};

/// Zeckendorf words of (F_n - 1)/q and (F_{n-1} - 1)/q on n = minimal_even_length(q) digits.
PiWords pi_words(std::uint64_t q);

/// Shortest V with u = V^(|u|/|V|).
DigitWord primitive_period(const GroupElement& u);

class PeriodicElement {
 public:
  explicit PeriodicElement(GroupElement element)
      : element_(std::move(element)), period_(primitive_period(element_)) {}

  const GroupElement& element() const noexcept { return element_; }
  const DigitWord& period() const noexcept { return period_; }

  friend bool operator==(const PeriodicElement& a, const PeriodicElement& b) { return a.element_ == b.element_; }
  friend auto operator<=>(const PeriodicElement& a, const PeriodicElement& b) { return a.element_ <=> b.element_; }

 private:
  GroupElement element_;
  DigitWord period_;
};

/// Elements of order dividing q in G*_l, l = minimal_even_length(q)/2, in
/// lexicographic order. Throws a resource error when l > max_ell.
std::vector<PeriodicElement> p_group(std::uint64_t q, std::size_t max_ell = kDefaultMaxPeriodicEll);

/// Repeat both words to length lcm(|u|, |v|), add digit-wise and normalize.
GroupElement oplus(const GroupElement& u, const GroupElement& v);
inline GroupElement oplus(const PeriodicElement& u, const PeriodicElement& v) {
  return oplus(u.element(), v.element());
}

/// Whether i * u equals the Zeckendorf word of i * N(u) for every 1 <= i <= q.
bool has_integer_multiples(const GroupElement& u, std::uint64_t q);

struct PiMultiplesReport {
  std::uint64_t q = 0;
  std::size_t length = 0;
  PiWords words;
  std::vector<GroupElement> pi_multiples;        // i * Pi, i = 1..q
  std::vector<GroupElement> pi_prime_multiples;  // i * Pi', i = 1..q
  bool multiples_ok = false;                     // claim (a), both families
  bool rotation_ok = false;                      // claim (b): sigma(Pi') = Pi
  std::optional<bool> uniqueness_ok;             // claim (c); nullopt when the scan exceeds the bound
  std::vector<GroupElement> satisfiers;          // non-identity elements with property (a)
  std::optional<std::uint64_t> span_index;       // [P*_q : <Pi, Pi'>] when scanned
};

PiMultiplesReport verify_pi_multiples(std::uint64_t q, std::size_t max_ell = kDefaultMaxPeriodicEll);

}  // namespace circfib

#endif  // CIRCFIB_ORDERQ_HPP
