#include <doctest.h>

#include <random>

#include "circfib/fibcore.hpp"
#include "support.hpp"

using namespace circfib;
using test::error_kind;
using test::w;

TEST_CASE("fib uses F0 = 1, F1 = 2 and extends back to F-2 = 0") {
  const int expected[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int k = -2; k <= 7; ++k) CHECK(fib(k) == expected[k + 2]);
  CHECK(error_kind([] { fib(-3); }) == ErrorKind::domain);
}

TEST_CASE("classical Fibonacci numbers shift by two") {
  CHECK(classical_fib(0) == 0);
  CHECK(classical_fib(1) == 1);
  CHECK(classical_fib(2) == 1);
  for (int k = 0; k <= 80; ++k) CHECK(fib(k) == classical_fib(k + 2));
  CHECK(fib(90) == BigInt("7540113804746346429"));
}

TEST_CASE("digit word parsing and printing") {
  CHECK(DigitWord::parse("020111").str() == "020111");
  CHECK(DigitWord::parse("0,2,0,1").str() == "0201");
  CHECK(DigitWord::parse("0,12,3").str() == "0,12,3");
  CHECK(DigitWord::parse("0,12,3")[1] == 12);
  CHECK(error_kind([] { DigitWord::parse(""); }) == ErrorKind::domain);
  CHECK(error_kind([] { DigitWord::parse("01x"); }) == ErrorKind::domain);
  CHECK(DigitWord::parse("0200").max_digit() == 2);
  CHECK(DigitWord::parse("0000").is_zero());
  CHECK_FALSE(DigitWord::parse("0200").is_binary());
}

TEST_CASE("circular words compare positionally and index cyclically") {
  CHECK_FALSE(w("1000") == w("0001"));
  const CircWord x = w("0123");
  CHECK(x.at(-1) == 3);
  CHECK(x.at(4) == 0);
  CHECK(x.at(9) == 1);
}

TEST_CASE("valuation and zeckendorf") {
  CHECK(valuation(w("0101")) == 7);
  CHECK(valuation(w("0002")) == 10);
  CHECK(valuation(w("1111")) == 11);
  CHECK(zeckendorf(7, 4).str() == "0101");
  CHECK(zeckendorf(0, 3).str() == "000");
  CHECK(zeckendorf(12, 5).str() == "10101");
  CHECK(error_kind([] { zeckendorf(8, 4); }) == ErrorKind::capacity);
}

TEST_CASE("zeckendorf round-trips every value that fits") {
  const std::size_t len = 14;
  const auto top = static_cast<unsigned>(fib(static_cast<int>(len)));
  for (unsigned n = 0; n < top; ++n) {
    const DigitWord z = zeckendorf(n, len);
    CHECK(valuation(z) == n);
    for (std::size_t i = 0; i + 1 < len; ++i) CHECK_FALSE((z[i] == 1 && z[i + 1] == 1));
  }
}

TEST_CASE("valuation of a binary word survives zeckendorf") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t len = 1 + rng() % 40;
    std::vector<Digit> d(len);
    for (auto& x : d) x = rng() % 2;
    const DigitWord b(d);
    const BigInt v = valuation(b);
    if (v < fib(static_cast<int>(len))) CHECK(valuation(zeckendorf(v, len)) == v);
  }
}

TEST_CASE("cyclic admissibility includes the wrap pair") {
  CHECK(is_admissible(w("0101")));
  CHECK(is_admissible(w("1010")));
  CHECK(is_admissible(w("0")));
  CHECK_FALSE(is_admissible(w("1")));
  CHECK_FALSE(is_admissible(w("1001")));
  CHECK_FALSE(is_admissible(w("0110")));
  CHECK_FALSE(is_admissible(w("0201")));
}

TEST_CASE("rotation moves the last digit to the front") {
  CHECK(rotate(w("0001")) == w("1000"));
  CHECK(rotate(w("0001"), -1) == w("0010"));
  const CircWord x = w("0120021");
  CHECK(rotate(x, 7) == x);
  CHECK(rotate(rotate(x), 3) == rotate(x, 4));
}

TEST_CASE("alternating words") {
  CHECK(alternating_word(4, 0) == w("0101"));
  CHECK(alternating_word(6, 1) == w("101010"));
}

TEST_CASE("Fibonacci word prefix and letter counts") {
  CHECK(fibonacci_word_prefix(8).str() == "abaababa");
  CHECK(fibonacci_word_prefix(13).str() == "abaababaabaab");
  CHECK(fibonacci_word_prefix(0).size() == 0);
  const LetterCounts c = letter_counts(fibonacci_word_prefix(21));
  CHECK(c.a == 13);
  CHECK(c.b == 8);
  CHECK(error_kind([] { LetterWord("abc"); }) == ErrorKind::domain);
}

TEST_CASE("balanced property") {
  CHECK(check_balanced(fibonacci_word_prefix(100), 7));
  CHECK_FALSE(check_balanced(LetterWord("aabbaa"), 2));
  const LetterWord m = fibonacci_word_prefix(30);
  CHECK(check_balanced(m, m.size()));
  CHECK(error_kind([&] { check_balanced(m, 0); }) == ErrorKind::domain);
  CHECK(error_kind([&] { check_balanced(m, 31); }) == ErrorKind::domain);
}
