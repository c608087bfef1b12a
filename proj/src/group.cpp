#include "circfib/group.hpp"

#include <numeric>

#include "circfib/certify.hpp"
#include "circfib/errors.hpp"
#include "circfib/rewrite.hpp"

namespace circfib {

GroupElement GroupElement::from_word(const CircWord& w) {
  if (w.size() % 2 != 0) throw domain_error("group element needs even length, got " + w.str());
  if (!is_admissible(w)) throw domain_error("group element must be admissible: " + w.str());
  if (w.linear().is_zero()) throw Error(ErrorKind::zero_word, "the zero word is not a group element");
  if (is_identity_spelling(w)) return GroupElement(canonical_identity(w.size()));
  return GroupElement(w);
}

bool GroupElement::is_identity() const { return word_ == canonical_identity(word_.size()); }

GroupElement identity(std::size_t ell) {
  if (ell < 1) throw domain_error("identity: l must be at least 1");
  return GroupElement::from_word(canonical_identity(2 * ell));
}

GroupElement add(const GroupElement& u, const GroupElement& v) {
  if (u.size() != v.size()) throw domain_error("add: length mismatch " + u.str() + " + " + v.str());
  std::vector<Digit> sum(u.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = u.word()[i] + v.word()[i];
  return GroupElement::from_word(normalize(CircWord(std::move(sum))));
}

GroupElement neg(const GroupElement& u) {
  std::vector<Digit> flipped(u.size());
  for (std::size_t i = 0; i < flipped.size(); ++i) flipped[i] = 1 - u.word()[i];
  return GroupElement::from_word(normalize(CircWord(std::move(flipped))));
}

GroupElement scalar_mul(std::int64_t k, const GroupElement& u) {
  GroupElement base = k < 0 ? neg(u) : u;
  auto count = static_cast<std::uint64_t>(k < 0 ? -(k + 1) : k) + (k < 0 ? 1 : 0);
  GroupElement result = identity(u.ell());
  while (count) {
    if (count & 1) result = add(result, base);
    count >>= 1;
    if (count) base = add(base, base);
  }
  return result;
}

std::vector<CircWord> admissible_words(std::size_t n) {
  std::vector<CircWord> out;
  if (n == 0) return out;
  std::vector<Digit> digits(n, 0);
  const auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (!(n > 1 && digits[n - 1] == 1 && digits[0] == 1) && !(n == 1 && digits[0] == 1))
        out.emplace_back(digits);
      return;
    }
    digits[i] = 0;
    self(self, i + 1);
    if (i == 0 || digits[i - 1] == 0) {
      digits[i] = 1;
      self(self, i + 1);
      digits[i] = 0;
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<GroupElement> enumerate(std::size_t ell, std::size_t max_ell) {
  if (ell < 1) throw domain_error("enumerate: l must be at least 1");
  if (ell > max_ell)
    throw resource_error("enumerate: l = " + std::to_string(ell) + " exceeds the bound " + std::to_string(max_ell));
  const CircWord other_identity = alternating_word(2 * ell, 1);
  std::vector<GroupElement> out;
  for (const auto& w : admissible_words(2 * ell)) {
    if (w.linear().is_zero() || w == other_identity) continue;
    out.push_back(GroupElement::from_word(w));
  }
  return out;
}

BigInt d_value(std::size_t ell) {
  if (ell < 1) throw domain_error("d_value: l must be at least 1");
  const int l = static_cast<int>(ell);
  return ell % 2 == 0 ? fib(l - 2) : fib(l - 1) + fib(l - 3);
}

GroupStructure predicted_structure(std::size_t ell, const std::function<BigInt(std::size_t)>& d_formula) {
  const BigInt d = d_formula(ell);
  const auto dd = static_cast<std::uint64_t>(d);
  if (ell % 2 == 1) return {dd * dd, dd, dd, d};
  return {5 * dd * dd, 5 * dd, dd, d};
}

GroupStructure decompose(std::size_t ell, std::size_t max_ell, const std::function<BigInt(std::size_t)>& d_formula) {
  const auto elements = enumerate(ell, max_ell);
  const auto cert = certify_two_generators<GroupElement>(elements, identity(ell), add);
  if (!cert)
    throw Error(ErrorKind::structural_mismatch,
                "decompose: no two-generator certificate for G*_" + std::to_string(ell));
  const GroupStructure predicted = predicted_structure(ell, d_formula);
  const GroupStructure found{cert->order, cert->e1, cert->e2, predicted.d};
  if (!(found == predicted))
    throw Error(ErrorKind::structural_mismatch,
                "decompose: G*_" + std::to_string(ell) + " is Z/" + std::to_string(found.e1) + " x Z/" +
                    std::to_string(found.e2) + " but the formula predicts Z/" + std::to_string(predicted.e1) +
                    " x Z/" + std::to_string(predicted.e2));
  return found;
}

std::uint64_t element_order(const GroupElement& u) { return order_of(u, identity(u.ell()), add); }

GroupElement repeat_morphism(const GroupElement& u, std::size_t n) {
  if (n < 1) throw domain_error("repeat_morphism: n must be at least 1");
  std::vector<Digit> digits;
  digits.reserve(u.size() * n);
  for (std::size_t r = 0; r < n; ++r) digits.insert(digits.end(), u.word().digits().begin(), u.word().digits().end());
  return GroupElement::from_word(CircWord(std::move(digits)));
}

GcdReport gcd_property_report(std::size_t max_ell, const std::function<BigInt(std::size_t)>& d_formula) {
  if (max_ell < 2) throw domain_error("gcd_property_report: bound must be at least 2");
  GcdReport report;
  std::vector<BigInt> d(max_ell + 1);
  for (std::size_t l = 1; l <= max_ell; ++l) d[l] = d_formula(l);
  for (std::size_t m = 2; m <= max_ell; ++m) {
    for (std::size_t n = 2; n <= max_ell; ++n) {
      ++report.pairs_checked;
      const BigInt lhs = boost::multiprecision::gcd(d[m], d[n]);
      const BigInt& rhs = d[std::gcd(m, n)];
      if (lhs != rhs)
        report.failures.push_back({m, n, "gcd(" + d[m].str() + ", " + d[n].str() + ") = " + lhs.str() +
                                             " but d_" + std::to_string(std::gcd(m, n)) + " = " + rhs.str()});
    }
  }
  for (std::size_t l = 1; 2 * l <= max_ell; ++l) {
    ++report.even_indices_checked;
    const BigInt f = classical_fib(static_cast<int>(2 * l));
    if (d[2 * l] != f)
      report.failures.push_back({2 * l, 2 * l, "d_" + std::to_string(2 * l) + " = " + d[2 * l].str() + " but f_" +
                                                   std::to_string(2 * l) + " = " + f.str()});
  }
  return report;
}

}  // namespace circfib
