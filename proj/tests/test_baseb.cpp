#include <doctest.h>

#include "circfib/baseb.hpp"
#include "support.hpp"

using namespace circfib;
using test::error_kind;

namespace {
BaseBWord dec(const std::string& s) { return BaseBWord::parse(s, 10); }
}  // namespace

TEST_CASE("circular addition in base 10") {
  CHECK(circ_add_base_b(dec("142857"), dec("142857")).str() == "285714");
  CHECK(circ_add_base_b(dec("142857"), dec("857142")).str() == "000000");
  CHECK(circ_add_base_b(dec("05"), dec("05")).str() == "10");
  CHECK(circ_add_base_b(dec("90"), dec("20")).str() == "11");
  CHECK(dec("999").is_zero_class());
}

TEST_CASE("period words") {
  CHECK(period_word(10, 7).str() == "142857");
  CHECK(period_word(10, 3).str() == "3");
  CHECK(period_word(2, 3).str() == "01");
  CHECK(period_word(10, 1).str() == "0");
  CHECK(multiplicative_order(10, 7) == 6);
  CHECK(error_kind([] { period_word(10, 4); }) == ErrorKind::domain);
}

TEST_CASE("multiples of 142857") {
  const CyclicGroupReport r = verify_cyclic_group(10, 7);
  CHECK(r.passed);
  const char* printed[] = {"142857", "285714", "428571", "571428", "714285", "857142", "000000"};
  REQUIRE(r.multiples.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(r.multiples[i].str() == printed[i]);
  CHECK(verify_cyclic_group(10, 1).passed);
  const CyclicGroupReport three = verify_cyclic_group(10, 3);
  CHECK(three.passed);
  CHECK(three.multiples.back().str() == "0");
}

TEST_CASE("value map is an isomorphism onto Z/(b^n - 1)") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(check_isomorphism(2, n));
  CHECK(check_isomorphism(3, 3));
  CHECK(check_isomorphism(10, 2));
  for (int v = 0; v < 98; ++v) CHECK(BaseBWord::from_value(v, 2, 10).value() == v);
}
