#include <doctest.h>

#include <set>

#include "circfib/certify.hpp"
#include "circfib/group.hpp"
#include "circfib/rewrite.hpp"
#include "support.hpp"

using namespace circfib;
using test::e;
using test::error_kind;
using test::w;

TEST_CASE("group elements are even, admissible and nonzero") {
  CHECK(error_kind([] { e("010"); }) == ErrorKind::domain);
  CHECK(error_kind([] { e("0110"); }) == ErrorKind::domain);
  CHECK(error_kind([] { e("0000"); }) == ErrorKind::zero_word);
  CHECK(e("1010") == identity(2));
  CHECK(e("1010").is_identity());
  CHECK(identity(3).str() == "010101");
}

TEST_CASE("arithmetic examples") {
  CHECK(neg(e("0001")) == e("0100"));
  CHECK(neg(e("001001")) == e("001001"));
  CHECK(scalar_mul(2, e("000100")) == e("010010"));
  CHECK(scalar_mul(4, e("000100")) == e("010101"));
  CHECK(add(e("0001"), e("0100")) == e("0101"));
  CHECK(e("0001") - e("0001") == identity(2));
  CHECK(error_kind([] { add(e("01"), e("0101")); }) == ErrorKind::domain);
}

TEST_CASE("scalar multiples agree with repeated addition") {
  for (const auto& u : enumerate(3)) {
    GroupElement acc = identity(3);
    for (std::int64_t k = 0; k <= 9; ++k) {
      CHECK(scalar_mul(k, u) == acc);
      CHECK(scalar_mul(-k, u) == neg(acc));
      acc = acc + u;
    }
  }
}

TEST_CASE("negation is an involution") {
  for (std::size_t l = 1; l <= 5; ++l)
    for (const auto& u : enumerate(l)) CHECK(neg(neg(u)) == u);
}

TEST_CASE("admissible word counts are Lucas numbers") {
  const std::size_t lucas[] = {1, 3, 4, 7, 11, 18, 29, 47};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(admissible_words(n).size() == lucas[n - 1]);
  CHECK(admissible_words(4).front() == w("0000"));
}

TEST_CASE("group orders") {
  const std::size_t order[] = {1, 5, 16, 45, 121, 320, 841, 2205};
  for (std::size_t l = 1; l <= 8; ++l) CHECK(enumerate(l).size() == order[l - 1]);
  CHECK(error_kind([] { enumerate(11); }) == ErrorKind::resource);
  CHECK(error_kind([] { enumerate(4, 3); }) == ErrorKind::resource);
  const auto g2 = enumerate(2);
  CHECK(std::is_sorted(g2.begin(), g2.end()));
}

TEST_CASE("d values and predicted structure") {
  const int d[] = {1, 1, 4, 3, 11, 8, 29, 21, 76, 55};
  for (std::size_t l = 1; l <= 10; ++l) CHECK(d_value(l) == d[l - 1]);
  CHECK(predicted_structure(4) == GroupStructure{45, 15, 3, 3});
  CHECK(predicted_structure(5) == GroupStructure{121, 11, 11, 11});
}

TEST_CASE("exponents by certification") {
  const std::uint64_t exponent[] = {1, 5, 4, 15, 11};
  for (std::size_t l = 1; l <= 5; ++l) {
    const auto g = enumerate(l);
    const auto cert = certify_two_generators<GroupElement>(g, identity(l), add);
    REQUIRE(cert);
    CHECK(cert->e1 == exponent[l - 1]);
    CHECK(element_order(cert->g1) == cert->e1);
  }
}

TEST_CASE("decompose certifies the predicted structure") {
  CHECK(decompose(3) == GroupStructure{16, 4, 4, 4});
  CHECK(decompose(4) == GroupStructure{45, 15, 3, 3});
  CHECK(decompose(6).e1 == 40);
}

TEST_CASE("decompose fails under a corrupted d formula") {
  const auto wrong = [](std::size_t l) { return d_value(l) + (l == 3 ? 1 : 0); };
  CHECK(error_kind([&] { decompose(3, kDefaultMaxEll, wrong); }) == ErrorKind::structural_mismatch);
  CHECK(decompose(4, kDefaultMaxEll, wrong).order == 45);
}

TEST_CASE("certification separates Z/4 x Z/4 from Z/16 style orders") {
  // Z/2 x Z/8 has order 16 and exponent 8, so the certificate reports 8 x 2.
  using P = std::pair<int, int>;
  std::vector<P> elems;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 8; ++b) elems.push_back({a, b});
  const auto add_p = [](const P& x, const P& y) { return P{(x.first + y.first) % 2, (x.second + y.second) % 8}; };
  const auto cert = certify_two_generators<P>(elems, P{0, 0}, add_p);
  REQUIRE(cert);
  CHECK(cert->e1 == 8);
  CHECK(cert->e2 == 2);
}

TEST_CASE("repeat morphism") {
  CHECK(repeat_morphism(e("01"), 3) == e("010101"));
  CHECK(repeat_morphism(e("0001"), 2) == e("00010001"));
  const auto g = enumerate(2);
  for (const auto& u : g)
    for (const auto& v : g) CHECK(add(repeat_morphism(u, 2), repeat_morphism(v, 2)) == repeat_morphism(add(u, v), 2));
  std::set<GroupElement> images;
  for (const auto& u : enumerate(3)) images.insert(repeat_morphism(u, 2));
  CHECK(images.size() == 16);
  CHECK(error_kind([] { repeat_morphism(e("01"), 0); }) == ErrorKind::domain);
}

TEST_CASE("gcd property of d") {
  const GcdReport r = gcd_property_report(30);
  CHECK(r.passed());
  CHECK(r.pairs_checked == 29 * 29);
  CHECK(r.even_indices_checked == 15);
  const GcdReport bad = gcd_property_report(12, [](std::size_t l) { return l == 6 ? d_value(6) + 1 : d_value(l); });
  CHECK_FALSE(bad.passed());
  CHECK(error_kind([] { gcd_property_report(1); }) == ErrorKind::domain);
}
