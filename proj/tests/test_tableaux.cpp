#include "doctest.h"
#include "qhopf/word.hpp"

#include <random>

using namespace qhopf;

TEST_SUITE("tableaux") {
  TEST_CASE("row word and standardization") {
    Tableau t = parse_tableau("1,2,3/2,4/3");
    CHECK(row_word(t) == parse_word("324123"));
    CHECK(format_tableau(standardize_tableau(t)) == "1,3,5/2,6/4");
    CHECK(row_word(parse_tableau("1,2,3")) == parse_word("123"));
    CHECK(row_word(parse_tableau("1/2/3")) == parse_word("321"));
    CHECK(is_semistandard(t));
    CHECK_FALSE(is_standard(t));
  }

  TEST_CASE("inversion statistics") {
    Tableau t = parse_tableau("1,2,2,5/2,3,4/5");
    CHECK(ne_count({4, 3, 1}) == 11);
    CHECK(inv(t) == 6);
    CHECK(inv_c(t) == 5);
    for (int n = 1; n <= 8; ++n)
      for (const auto& la : partitions_of(n)) CHECK(inv(t_lambda(la)) == 0);
  }

  TEST_CASE("T_lambda") {
    CHECK(format_tableau(t_lambda({4})) == "1,2,3,4");
    CHECK(format_tableau(t_lambda({1, 1, 1})) == "1/2/3");
  }

  TEST_CASE("sign") {
    // sign(T) = (-1)^{l(w(st T))}
    Tableau t = parse_tableau("1,3/2");
    CHECK(sign(t) == -1);
    CHECK(sign(parse_tableau("1,2/3")) == 1);
  }

  TEST_CASE("products, rectification and (T)_S") {
    Tableau t = parse_tableau("1,2/3");
    CHECK(dot_product(t, Tableau{}) == t);
    CHECK(dot_product(parse_tableau("1,2"), parse_tableau("1")) == insertion_tableau({1, 2, 1}));
    CHECK(format_tableau(rect(Tableau({2, 1}, {{2}, {1, 4}, {3}}))) == format_tableau(insertion_tableau({3, 1, 4, 2})));
    CHECK(rect(t) == t);
    Tableau s({2, 1, 1}, {{2}, {1, 4}, {3}});
    CHECK(format_tableau(concat_on_top(parse_tableau("1,3/2/4"), s)) == "1,3,6/2,5,8/4,7");
  }

  TEST_CASE("rect agrees with insertion of the row word") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> k(1, 6);
      auto exts = standard_extensions({2, 1}, k(rng));
      const Tableau& s = exts[rng() % exts.size()];
      CHECK(rect(s) == insertion_tableau(row_word(s)));
    }
  }

  TEST_CASE("reverse slides on a two-row tableau") {
    auto splits = reverse_slide_expansion(parse_tableau("1,2,4,5,7/3,6"));
    REQUIRE(splits.size() == 4);
    CHECK(format_tableau(splits[0].u) == "1,2,4,5,7/3,6");
    CHECK(format_tableau(splits[3].u) == ".,.,.,2,5/1,3,4,6,7");
  }

  TEST_CASE("encodings") {
    CHECK(format_tableau(Tableau{}) == "-");
    CHECK(format_tableau(parse_tableau(".,.,2/.,1,4/3")) == ".,.,2/.,1,4/3");
    CHECK(parse_tableau(".,2/1").inner == Partition{1});
  }
}
