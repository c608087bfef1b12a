#ifndef CIRCFIB_CERTIFY_HPP
#define CIRCFIB_CERTIFY_HPP

// Rank-two certification of a finite abelian group given by its element list
// and its addition. Order and exponent alone do not pin the isomorphism type,
// so the certificate exhibits generators g1, g2 with <g1> ∩ <g2> = {0} and
// |<g1>| |<g2>| = |G|, which forces G = Z/e1 x Z/e2.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace circfib {

template <class T>
struct TwoGeneratorCertificate {
  std::uint64_t order = 0;
  std::uint64_t e1 = 0;  // exponent, order of g1
  std::uint64_t e2 = 0;  // order of g2, divides e1
  T g1;
  T g2;
};

/// Multiples 0, g, 2g, ... until the cycle closes; the size is the order of g.
template <class T, class Add>
std::vector<T> cyclic_subgroup(const T& g, const T& zero, Add add) {
  std::vector<T> out{zero};
  T x = g;
  while (!(x == zero)) {
    out.push_back(x);
    x = add(x, g);
  }
  return out;
}

template <class T, class Add>
std::uint64_t order_of(const T& g, const T& zero, Add add) {
  std::uint64_t k = 1;
  for (T x = g; !(x == zero); x = add(x, g)) ++k;
  return k;
}

/// Returns nullopt when no such pair exists, i.e. the group is not of rank <= 2
/// with the observed exponent.
template <class T, class Add>
std::optional<TwoGeneratorCertificate<T>> certify_two_generators(std::span<const T> elements, const T& zero,
                                                                 Add add) {
  const auto order = static_cast<std::uint64_t>(elements.size());
  if (order == 0) return std::nullopt;
  std::vector<std::uint64_t> orders;
  orders.reserve(elements.size());
  for (const auto& g : elements) orders.push_back(order_of(g, zero, add));
  const auto best = std::max_element(orders.begin(), orders.end());
  const std::uint64_t e1 = *best;
  if (order % e1 != 0) return std::nullopt;
  const std::uint64_t e2 = order / e1;
  const T g1 = elements[static_cast<std::size_t>(best - orders.begin())];

  const auto h1_list = cyclic_subgroup(g1, zero, add);
  const std::set<T> h1(h1_list.begin(), h1_list.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (orders[i] != e2) continue;
    const auto h2 = cyclic_subgroup(elements[i], zero, add);
    const bool trivial = std::none_of(h2.begin() + 1, h2.end(), [&](const T& x) { return h1.count(x) > 0; });
    if (trivial) return TwoGeneratorCertificate<T>{order, e1, e2, g1, elements[i]};
  }
  return std::nullopt;
}

}  // namespace circfib

#endif  // CIRCFIB_CERTIFY_HPP
