#include "doctest.h"
#include "qhopf/composition.hpp"

using namespace qhopf;

TEST_SUITE("comp") {
  TEST_CASE("descent sets") {
    CHECK(descent_set({2, 3, 1}) == std::vector<int>{2, 5});
    CHECK(descent_set({4}).empty());
    CHECK(descent_set({1, 1, 1}) == std::vector<int>{1, 2});
    CHECK(composition_of_set({2, 5}, 6) == Composition{2, 3, 1});
    CHECK(composition_of_set({}, 4) == Composition{4});
    CHECK(composition_of_set({1, 2, 3}, 4) == Composition{1, 1, 1, 1});
  }

  TEST_CASE("refinement order") {
    CHECK(refines({5}, {2, 3}));
    CHECK_FALSE(refines({2, 3}, {3, 2}));
    CHECK(refines({2, 1}, {2, 1}));
  }

  TEST_CASE("concatenation") {
    CHECK(concat({2, 1}, {1, 3}) == Composition{2, 1, 1, 3});
    CHECK(near_concat({2, 1}, {1, 3}) == Composition{2, 2, 3});
    CHECK(concat({}, {1, 2}) == Composition{1, 2});
  }

  TEST_CASE("complement, reverse, sorting") {
    // des(2,3,1) = {2,5}, complement in [5] is {1,3,4}
    CHECK(complement({2, 3, 1}) == Composition{1, 2, 1, 2});
    CHECK(complement(complement({2, 3, 1})) == Composition{2, 3, 1});
    CHECK(reverse({2, 3, 1}) == Composition{1, 3, 2});
    CHECK(to_partition({1, 3, 2}) == Partition{3, 2, 1});
  }

  TEST_CASE("enumeration") {
    CHECK(compositions_of(3) == std::vector<Composition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
    CHECK(compositions_of(6).size() == 32);
    CHECK(partitions_of(6).size() == 11);
    CHECK(transpose({2, 1, 1}) == Partition{3, 1});
    for (const auto& la : partitions_of(7)) CHECK(transpose(transpose(la)) == la);
  }

  TEST_CASE("text encodings") {
    CHECK(format_composition({}) == "-");
    CHECK(format_composition({2, 10}) == "2,10");
    CHECK(parse_composition("3,1,2") == Composition{3, 1, 2});
    CHECK_THROWS(parse_composition("3,x"));
  }
}
