#include <doctest.h>

#include <set>

#include "circfib/rewrite.hpp"
#include "circfib/wheels.hpp"
#include "support.hpp"

using namespace circfib;
using test::e;
using test::error_kind;
using test::w;

TEST_CASE("spanning tree counts") {
  const std::uint64_t tree_counts[] = {1, 5, 16, 45, 121, 320, 841, 2205, 5776, 15125};
  for (std::size_t l = 1; l <= 8; ++l) CHECK(spanning_trees(l).size() == tree_counts[l - 1]);
  for (std::size_t l = 1; l <= 10; ++l) CHECK(count_trees_matrix(l) == tree_counts[l - 1]);
  CHECK(count_trees_matrix(20) == 228826125);
  CHECK(error_kind([] { spanning_trees(11); }) == ErrorKind::resource);
  CHECK(error_kind([] { spanning_trees(0); }) == ErrorKind::domain);
}

TEST_CASE("the one-wheel has a single spoke tree") {
  const auto t = spanning_trees(1);
  REQUIRE(t.size() == 1);
  CHECK(t[0] == WheelTree{1, 1, 0});
}

TEST_CASE("spanning tree validity") {
  CHECK(is_spanning_tree(star_tree(4)));
  CHECK(is_spanning_tree(WheelTree{3, 1, 3}));
  CHECK_FALSE(is_spanning_tree(WheelTree{3, 0, 7}));  // the rim cycle
  CHECK_FALSE(is_spanning_tree(WheelTree{3, 3, 1}));  // triangle c v0 v1
  CHECK_FALSE(is_spanning_tree(WheelTree{3, 1, 1}));  // too few edges
  CHECK_FALSE(is_spanning_tree(WheelTree{3, 8, 3}));  // out of range
  CHECK_FALSE(is_spanning_tree(WheelTree{2, 0, 3}));  // parallel rims
  for (const auto& t : spanning_trees(5)) CHECK(is_spanning_tree(t));
}

TEST_CASE("tree words") {
  CHECK(tree_to_word(star_tree(3)) == w("111111"));
  CHECK(tree_to_word(WheelTree{3, 1, 3}) == w("100001"));
  CHECK(tree_to_word(WheelTree{3, 3, 2}) == w("111001"));
  CHECK(taxonomy(star_tree(3)) == e("010101"));
  CHECK(taxonomy(WheelTree{3, 1, 3}) == e("010000"));
  CHECK(taxonomy(WheelTree{3, 3, 2}) == e("010100"));
}

TEST_CASE("even zero blocks") {
  CHECK(is_tree_word(w("111111")));
  CHECK_FALSE(is_tree_word(w("1010")));
  CHECK(is_tree_word(w("1001")));
  CHECK(is_tree_word(w("0110")));
  CHECK_FALSE(is_tree_word(w("0000")));
  CHECK_FALSE(is_tree_word(w("1200")));
  for (std::size_t l = 1; l <= 5; ++l) {
    std::set<CircWord> images;
    for (const auto& t : spanning_trees(l)) images.insert(tree_to_word(t));
    CHECK(images.size() == spanning_trees(l).size());
    std::size_t tree_words = 0;
    for (std::uint32_t bits = 0; bits < (1u << (2 * l)); ++bits) {
      std::vector<Digit> d(2 * l);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = (bits >> i) & 1u;
      const CircWord x(d);
      CHECK(is_tree_word(x) == (images.count(x) > 0));
      tree_words += is_tree_word(x) ? 1 : 0;
    }
    CHECK(tree_words == enumerate(l).size());
  }
}

TEST_CASE("taxonomy table and transported operations") {
  for (std::size_t l = 1; l <= 6; ++l) CHECK(TaxonomyTable(l).is_bijective());
  const TaxonomyTable t(2);
  const WheelTree star = star_tree(2);
  CHECK(t.element_of(star).is_identity());
  CHECK(t.tree_of(identity(2)) == star);
  for (const auto& a : t.trees()) {
    CHECK(tree_add(t, a, star) == a);
    CHECK(tree_add(t, a, tree_neg(t, a)) == star);
    for (const auto& b : t.trees()) CHECK(tree_add(t, a, b) == tree_add(t, b, a));
  }
  CHECK(error_kind([&] { t.element_of(WheelTree{2, 0, 3}); }) == ErrorKind::domain);
}
