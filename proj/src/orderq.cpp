#include "circfib/orderq.hpp"

#include <numeric>
#include <set>

#include "circfib/errors.hpp"
#include "circfib/rewrite.hpp"

namespace circfib {

std::size_t minimal_even_length(std::uint64_t q) {
  if (q < 2) throw domain_error("minimal_even_length: q must be at least 2");
  // (F_{n-1}, F_n) mod q, starting from (F_0, F_1) = (1, 2).
  std::uint64_t prev = 1 % q, cur = 2 % q;
  for (std::size_t n = 1;; ++n) {
    if (n >= 2 && n % 2 == 0 && prev == 1 && cur == 1) return n;
    const std::uint64_t next = (prev + cur) % q;
    prev = cur;
    cur = next;
  }
}

std::optional<std::size_t> minimal_even_length_via_d(std::uint64_t q, std::size_t ell_limit) {
  for (std::size_t l = 1; l <= ell_limit; ++l) {
    if (d_value(l) % q == 0) return 2 * l;
  }
  return std::nullopt;
}

PiWords pi_words(std::uint64_t q) {
  const std::size_t n = minimal_even_length(q);
  const int ni = static_cast<int>(n);
  const BigInt pi_value = (fib(ni) - 1) / q;
  const BigInt pi_prime_value = (fib(ni - 1) - 1) / q;
  return {GroupElement::from_word(CircWord(zeckendorf(pi_value, n))),
          GroupElement::from_word(CircWord(zeckendorf(pi_prime_value, n))), pi_value, pi_prime_value};
}

DigitWord primitive_period(const GroupElement& u) {
  const auto digits = u.word().digits();
  const std::size_t n = digits.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = digits[i] == digits[i - p];
    if (periodic) return DigitWord(std::vector<Digit>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(p)));
  }
  return u.word().linear();
}

std::vector<PeriodicElement> p_group(std::uint64_t q, std::size_t max_ell) {
  const std::size_t ell = minimal_even_length(q) / 2;
  if (ell > max_ell)
    throw resource_error("p_group: q = " + std::to_string(q) + " lives at l = " + std::to_string(ell) +
                         ", above the bound " + std::to_string(max_ell));
  std::vector<PeriodicElement> out;
  for (const auto& g : enumerate(ell, max_ell)) {
    if (scalar_mul(static_cast<std::int64_t>(q), g).is_identity()) out.emplace_back(g);
  }
  return out;
}

GroupElement oplus(const GroupElement& u, const GroupElement& v) {
  const std::size_t m = std::lcm(u.size(), v.size());
  const GroupElement uu = repeat_morphism(u, m / u.size());
  const GroupElement vv = repeat_morphism(v, m / v.size());
  std::vector<Digit> sum(m);
  for (std::size_t i = 0; i < m; ++i) sum[i] = uu.word()[i] + vv.word()[i];
  return GroupElement::from_word(normalize(CircWord(std::move(sum))));
}

namespace {

// Zeckendorf word of value as a group element, or nullopt when it does not fit
// on n digits or is not cyclically admissible.
std::optional<GroupElement> zeckendorf_element(const BigInt& value, std::size_t n) {
  try {
    const CircWord w(zeckendorf(value, n));
    if (!is_admissible(w) || w.linear().is_zero()) return std::nullopt;
    return GroupElement::from_word(w);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool multiples_match(const GroupElement& u, const BigInt& value, std::uint64_t q, std::vector<GroupElement>* chain) {
  GroupElement acc = u;
  bool ok = true;
  for (std::uint64_t i = 1; i <= q; ++i) {
    if (i > 1) acc = add(acc, u);
    if (chain) chain->push_back(acc);
    const auto expected = zeckendorf_element(value * i, u.size());
    if (!expected || !(*expected == acc)) {
      ok = false;
      if (!chain) return false;
    }
  }
  return ok;
}

}  // namespace

bool has_integer_multiples(const GroupElement& u, std::uint64_t q) {
  return multiples_match(u, valuation(u.word()), q, nullptr);
}

PiMultiplesReport verify_pi_multiples(std::uint64_t q, std::size_t max_ell) {
  PiMultiplesReport r{q, minimal_even_length(q), pi_words(q), {}, {}, false, false, std::nullopt, {}, std::nullopt};
  const bool a1 = multiples_match(r.words.pi, r.words.pi_value, q, &r.pi_multiples);
  const bool a2 = multiples_match(r.words.pi_prime, r.words.pi_prime_value, q, &r.pi_prime_multiples);
  r.multiples_ok = a1 && a2;
  r.rotation_ok = GroupElement::from_word(rotate(r.words.pi_prime.word())) == r.words.pi;

  if (r.length / 2 <= max_ell) {
    const auto group = p_group(q, max_ell);
    for (const auto& p : group) {
      if (!p.element().is_identity() && has_integer_multiples(p.element(), q)) r.satisfiers.push_back(p.element());
    }
    const std::set<GroupElement> expected{r.words.pi, r.words.pi_prime};
    const std::set<GroupElement> found(r.satisfiers.begin(), r.satisfiers.end());
    r.uniqueness_ok = found == expected;

    std::set<GroupElement> span{identity(r.length / 2)};
    for (std::uint64_t i = 0; i < q; ++i) {
      for (std::uint64_t j = 0; j < q; ++j) {
        span.insert(add(scalar_mul(static_cast<std::int64_t>(i), r.words.pi),
                        scalar_mul(static_cast<std::int64_t>(j), r.words.pi_prime)));
      }
    }
    r.span_index = group.size() / span.size();
  }
  return r;
}

}  // namespace circfib
