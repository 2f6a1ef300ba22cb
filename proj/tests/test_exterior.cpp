#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclolie/exterior.hpp"

using namespace cyclolie;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(6, 7) == 0);
  CHECK(binomial(10, 5) == 252);
}

TEST_CASE("multi-index enumeration is lexicographic and complete") {
  auto all = enumerate_multiindices(4, 2);
  REQUIRE(all.size() == 6);
  CHECK(all.front() == MultiIndex{1, 2});
  CHECK(all.back() == MultiIndex{3, 4});
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);

  CHECK(enumerate_multiindices(3, 0) == std::vector<MultiIndex>{{}});
  CHECK(enumerate_multiindices(2, 3).empty());
}

TEST_CASE("sort_with_sign tracks permutation parity") {
  auto sorted = sort_with_sign({3, 1, 2});
  REQUIRE(sorted.has_value());
  CHECK(sorted->first == MultiIndex{1, 2, 3});
  CHECK(sorted->second == 1);  // (3,1,2) is an even permutation

  auto swap = sort_with_sign({2, 1});
  REQUIRE(swap.has_value());
  CHECK(swap->second == -1);

  CHECK(!sort_with_sign({1, 2, 1}).has_value());
  auto empty = sort_with_sign({});
  REQUIRE(empty.has_value());
  CHECK(empty->second == 1);
}

TEST_CASE("unshuffles enumerate block splits with signs") {
  auto splits = unshuffles(4, 2);
  REQUIRE(splits.size() == binomial(4, 2));
  for (const Unshuffle& u : splits) {
    REQUIRE(u.first.size() == 2);
    REQUIRE(u.second.size() == 2);
    // Blocks partition 0..3; the sign matches sorting (first, second) back.
    std::vector<int> merged;
    for (int x : u.first) merged.push_back(x + 1);
    for (int x : u.second) merged.push_back(x + 1);
    auto sorted = sort_with_sign(merged);
    REQUIRE(sorted.has_value());
    CHECK(sorted->first == MultiIndex{1, 2, 3, 4});
    CHECK(sorted->second == u.sign);
  }
  CHECK(unshuffles(3, 0).size() == 1);
  CHECK(unshuffles(3, 3).size() == 1);
}

TEST_CASE("split_sign matches sort_with_sign on concatenation") {
  MultiIndex a{1, 4};
  MultiIndex b{2, 3};
  std::vector<int> concat{1, 4, 2, 3};
  auto sorted = sort_with_sign(concat);
  REQUIRE(sorted.has_value());
  CHECK(split_sign(a, b) == sorted->second);
  CHECK(split_sign({}, {1, 2}) == 1);
  CHECK(split_sign({2}, {1}) == -1);
}
