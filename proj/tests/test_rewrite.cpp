#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "circfib/group.hpp"
#include "circfib/rewrite.hpp"
#include "support.hpp"

using namespace circfib;
using test::error_kind;
using test::w;

namespace {

CircWord random_sum(std::mt19937& rng, const std::vector<CircWord>& pool) {
  const CircWord& a = pool[rng() % pool.size()];
  const CircWord& b = pool[rng() % pool.size()];
  std::vector<Digit> d(a.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] + b[i];
  return CircWord(std::move(d));
}

// Random admissible word of length n with no forced structure.
CircWord random_admissible(std::mt19937& rng, std::size_t n) {
  while (true) {
    std::vector<Digit> d(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if ((i == 0 || d[i - 1] == 0) && rng() % 3 == 0) d[i] = 1;
    CircWord c(std::move(d));
    if (is_admissible(c)) return c;
  }
}

}  // namespace

TEST_CASE("rule A and rule B moves") {
  CHECK(apply_move(w("1100"), {Rule::A, 1, Direction::forward}) == w("0010"));
  CHECK(apply_move(w("0020"), {Rule::B, 2, Direction::forward}) == w("1001"));
  CHECK(apply_move(w("0010"), {Rule::A, 1, Direction::backward}) == w("1100"));
  CHECK(apply_move(w("1001"), {Rule::B, 2, Direction::backward}) == w("0020"));
  CHECK(apply_move(w("1001"), {Rule::A, 0, Direction::forward}) == w("0100"));
  CHECK(crosses_seam(4, {Rule::A, 0, Direction::forward}));
  CHECK_FALSE(crosses_seam(4, {Rule::A, 1, Direction::forward}));
  CHECK_FALSE(is_applicable(w("0000"), {Rule::A, 1, Direction::forward}));
  CHECK(error_kind([] { apply_move(w("0100"), {Rule::B, 1, Direction::forward}); }) == ErrorKind::inapplicable_move);
}

TEST_CASE("every applicable move is undone by its inverse") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<Digit> d(n);
    for (auto& x : d) x = rng() % 4;
    const CircWord x(d);
    for (const auto& m : applicable_moves(x)) {
      const RewriteMove back{m.rule, m.position,
                             m.direction == Direction::forward ? Direction::backward : Direction::forward};
      CHECK(apply_move(apply_move(x, m), back) == x);
    }
  }
}

TEST_CASE("moves inside the word keep the linear valuation") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 4 + rng() % 8;
    std::vector<Digit> d(n);
    for (auto& x : d) x = rng() % 3;
    const CircWord x(d);
    for (const auto& m : applicable_moves(x))
      if (!crosses_seam(n, m)) CHECK(valuation(apply_move(x, m)) == valuation(x));
  }
}

TEST_CASE("oracle normal forms") {
  CHECK(oracle_normal_form(w("0002")) == w("0010"));
  CHECK(oracle_normal_form(w("020111")) == w("010010"));
  CHECK(oracle_normal_form(w("1110")) == w("0100"));
  CHECK(oracle_normal_form(w("000200")) == w("010010"));
  CHECK(oracle_normal_form(w("100001")) == w("010000"));
  CHECK(oracle_normal_form(w("111001")) == w("010100"));
  CHECK(admissible_equivalents(w("1111")).admissible == std::vector<CircWord>{w("0101"), w("1010")});
  CHECK(admissible_equivalents(w("111111")).admissible == std::vector<CircWord>{w("010101"), w("101010")});
  CHECK(oracle_normal_form(w("1111")) == w("0101"));
}

TEST_CASE("orbit of 0101 reaches 1010 with digits at most 2") {
  const Orbit o = orbit(w("0101"), 2, 1000);
  CHECK_FALSE(o.truncated);
  CHECK(std::binary_search(o.members.begin(), o.members.end(), w("1010")));
  CHECK(std::binary_search(o.members.begin(), o.members.end(), w("1111")));
  CHECK(admissible_members(o) == std::vector<CircWord>{w("0101"), w("1010")});
  CHECK(orbit(w("0101"), 2, 3).truncated);
}

TEST_CASE("normalize matches the frozen normal forms") {
  CHECK(normalize(w("0002")) == w("0010"));
  CHECK(normalize(w("1111")) == w("0101"));
  CHECK(normalize(w("1010")) == w("0101"));
  CHECK(normalize(w("020111")) == w("010010"));
  CHECK(normalize(w("1110")) == w("0100"));
  CHECK(normalize(w("000200")) == w("010010"));
  CHECK(normalize(w("100001")) == w("010000"));
  CHECK(normalize(w("111001")) == w("010100"));
  CHECK(normalize(w("111111")) == w("010101"));
  CHECK(normalize(w("0100")) == w("0100"));
}

TEST_CASE("normalize rejects odd lengths and the zero word") {
  CHECK(error_kind([] { normalize(w("011")); }) == ErrorKind::domain);
  CHECK(error_kind([] { normalize(w("0000")); }) == ErrorKind::zero_word);
  CHECK(error_kind([] { normalize(w("0,30,0,30"), NormalizeOptions{3}); }) == ErrorKind::normalization);
}

TEST_CASE("normalize agrees with the BFS oracle on every {0,1,2}-word up to length 6") {
  for (std::size_t n : {2u, 4u, 6u}) {
    std::vector<Digit> d(n, 0);
    std::size_t checked = 0;
    while (true) {
      std::size_t i = 0;
      while (i < n && d[i] == 2) d[i++] = 0;
      if (i == n) break;
      ++d[i];
      const CircWord x(d);
      const auto adm = admissible_equivalents(x).admissible;
      const CircWord nf = normalize(x);
      if (adm.size() == 2) {
        CHECK(adm == std::vector<CircWord>{alternating_word(n, 0), alternating_word(n, 1)});
        CHECK(nf == alternating_word(n, 0));
      } else {
        REQUIRE(adm.size() == 1);
        CHECK(nf == adm.front());
      }
      ++checked;
    }
    CHECK(checked == static_cast<std::size_t>(std::pow(3, n)) - 1);
  }
}

TEST_CASE("normalize agrees with the oracle on random sums at length 10") {
  std::mt19937 rng(3);
  const auto pool = admissible_words(10);
  for (int t = 0; t < 25; ++t) {
    const CircWord x = random_sum(rng, pool);
    if (x.linear().is_zero()) continue;
    const auto adm = admissible_equivalents(x).admissible;
    REQUIRE_FALSE(adm.empty());
    CHECK(normalize(x) == (adm.size() == 2 ? alternating_word(10, 0) : adm.front()));
  }
}

TEST_CASE("normalize on long random sums keeps the seam invariant") {
  // Seam-crossing moves change N by multiples of gcd(F_n - 1, F_{n-1} - 1).
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 20 + 2 * (rng() % 21);
    const CircWord a = random_admissible(rng, n), b = random_admissible(rng, n);
    std::vector<Digit> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i] + b[i];
    const CircWord x(d);
    if (x.linear().is_zero()) continue;
    const CircWord nf = normalize(x);
    CHECK(is_admissible(nf));
    CHECK_FALSE(nf.linear().is_zero());
    const int ni = static_cast<int>(n);
    const BigInt g = boost::multiprecision::gcd(fib(ni) - 1, fib(ni - 1) - 1);
    CHECK((valuation(nf) - valuation(x)) % g == 0);
    CHECK(normalize(nf) == nf);
  }
}

TEST_CASE("identity spellings") {
  CHECK(canonical_identity(6) == w("010101"));
  CHECK(is_identity_spelling(w("101010")));
  CHECK_FALSE(is_identity_spelling(w("100100")));
  CHECK(equivalent(w("1111"), w("0101")));
  CHECK(equivalent(w("0002"), w("0010")));
  CHECK_FALSE(equivalent(w("0001"), w("0010")));
}
