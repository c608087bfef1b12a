#ifndef CIRCFIB_GROUP_HPP
#define CIRCFIB_GROUP_HPP

// The group G*_l of admissible circular words of length 2l containing a 1,
// with (01)^l and (10)^l identified (stored as (01)^l).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "circfib/fibcore.hpp"

namespace circfib {

inline constexpr std::size_t kDefaultMaxEll = 10;

class GroupElement {
 public:
  /// Validates (even length, admissible, contains a 1) and canonicalizes the identity.
  static GroupElement from_word(const CircWord& w);
  static GroupElement parse(std::string_view text) { return from_word(CircWord::parse(text)); }

  const CircWord& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  std::size_t ell() const noexcept { return word_.size() / 2; }
  bool is_identity() const;
  std::string str() const { return word_.str(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  explicit GroupElement(CircWord w) : word_(std::move(w)) {}
  CircWord word_;
};

GroupElement identity(std::size_t ell);
GroupElement add(const GroupElement& u, const GroupElement& v);
/// Complement every digit, then normalize.
GroupElement neg(const GroupElement& u);
GroupElement scalar_mul(std::int64_t k, const GroupElement& u);

inline GroupElement operator+(const GroupElement& u, const GroupElement& v) { return add(u, v); }
inline GroupElement operator-(const GroupElement& u) { return neg(u); }
inline GroupElement operator-(const GroupElement& u, const GroupElement& v) { return add(u, neg(v)); }
inline GroupElement operator*(std::int64_t k, const GroupElement& u) { return scalar_mul(k, u); }

/// Admissible circular words of length n, in lexicographic order (zero word included).
std::vector<CircWord> admissible_words(std::size_t n);

/// All of G*_l in lexicographic order. Throws a resource error for l > max_ell.
std::vector<GroupElement> enumerate(std::size_t ell, std::size_t max_ell = kDefaultMaxEll);

/// d_l = F_{l-2} for even l, F_{l-1} + F_{l-3} for odd l.
BigInt d_value(std::size_t ell);

struct GroupStructure {
  std::uint64_t order = 0;
  std::uint64_t e1 = 0;
  std::uint64_t e2 = 0;
  BigInt d = 0;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// The isomorphism type claimed for G*_l: (Z/d)^2 for odd l, Z/5d x Z/d for even l.
GroupStructure predicted_structure(std::size_t ell, const std::function<BigInt(std::size_t)>& d_formula = d_value);

/// Invariant factors found by two-generator certification on the enumerated
/// group. Throws ErrorKind::structural_mismatch if certification fails or the
/// result differs from predicted_structure(ell, d_formula).
GroupStructure decompose(std::size_t ell, std::size_t max_ell = kDefaultMaxEll,
                         const std::function<BigInt(std::size_t)>& d_formula = d_value);

std::uint64_t element_order(const GroupElement& u);

/// W -> W^n, an injective morphism G*_l -> G*_{nl}.
GroupElement repeat_morphism(const GroupElement& u, std::size_t n);

struct GcdFailure {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string detail;
};

struct GcdReport {
  std::size_t pairs_checked = 0;
  std::size_t even_indices_checked = 0;
  std::vector<GcdFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// gcd(d_m, d_n) = d_gcd(m,n) for 2 <= m, n <= max_ell, and d_{2l} = f_{2l}
/// for 2l <= max_ell.
GcdReport gcd_property_report(std::size_t max_ell,
                              const std::function<BigInt(std::size_t)>& d_formula = d_value);

}  // namespace circfib

#endif  // CIRCFIB_GROUP_HPP
