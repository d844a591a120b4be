#include "doctest.h"
#include "qhopf/syct.hpp"

using namespace qhopf;

TEST_SUITE("syct") {
  TEST_CASE("composition poset") {
    CHECK(covers({2, 1}) == std::vector<Composition>{{2, 1, 1}, {3, 1}, {2, 2}});
    CHECK(covers({}) == std::vector<Composition>{{1}});
    CHECK(is_cover({2, 1}, {2, 2}));
    CHECK_FALSE(is_cover({2, 1}, {1, 2, 1}));
  }

  TEST_CASE("chains and tableaux") {
    Chain ch{{2, 1}, {2, 1, 1}, {3, 1, 1}, {3, 1, 2}, {3, 2, 2}, {3, 2, 3}};
    auto t = syct_from_chain(ch);
    CHECK(format_syct(t) == ".,.,2/.,4/1,3,5");
    CHECK(column_sequence(ch) == std::vector<int>{1, 3, 2, 2, 3});
    CHECK(chain_from_syct(t) == ch);
    CHECK(format_syct(syct_from_chain({{}, {1}})) == "1");
    for (const auto& c : saturated_chains({}, 5)) CHECK(chain_from_syct(syct_from_chain(c)) == c);
  }

  TEST_CASE("enumeration") {
    CHECK(format_syct(u_alpha({3, 2, 3})) == "1,2,3/4,5/6,7,8");
    CHECK(enumerate_syct({1, 2}).size() == 1);
    CHECK(enumerate_syct({2, 3}).size() == 3);
    CHECK(enumerate_syct({3, 2}).size() == 2);
    CHECK(enumerate_syct({2, 2, 1}).size() == 2);
    CHECK(enumerate_ssyct({2, 1}, 3) == enumerate_ssyct_filter({2, 1}, 3));
  }

  TEST_CASE("odd quasisymmetric Schur functions") {
    CHECK(odd_qs_schur({1, 2}) == OddLin(Composition{1, 2}, -1));
    OddLin s23;
    s23.add_term({2, 3}, 1);
    s23.add_term({1, 2, 2}, -1);
    s23.add_term({1, 3, 1}, 1);
    CHECK(odd_qs_schur({2, 3}) == s23);
    OddLin s122;
    s122.add_term({1, 2, 2}, 1);
    s122.add_term({1, 1, 2, 1}, -1);
    CHECK(odd_qs_schur({1, 2, 2}) == s122);
    CHECK(odd_schur_f({2, 1}) == -(odd_qs_schur({2, 1}) + odd_qs_schur({1, 2})));
    CHECK(odd_schur_f({3}) == odd_qs_schur({3}));
  }

  TEST_CASE("Mason's bijection") {
    Tableau skew({2, 1}, {{4, 5}, {1, 6}, {2, 3}});
    CompositionTableau tau({1, 2}, {{1}, {6}, {2, 3, 4, 5}});
    CHECK(mason(tau) == skew);
    CHECK(mason_inverse(skew, {1, 2}) == tau);
    CHECK(format_tableau(mason(parse_syct("1,2,4"))) == "1,2,4");
  }

  TEST_CASE("removal operators") {
    CHECK(rem_s({2, 1}, 2) == Composition{1, 1});
    CHECK(rem_s({1, 2}, 2) == Composition{1, 1});
    CHECK_FALSE(rem_s({1, 2}, 3).has_value());
  }

  TEST_CASE("Pieri and LR coefficients") {
    OqsLin want;
    for (auto [c, a] : std::vector<std::pair<long long, Composition>>{
             {1, {1, 4}}, {-1, {2, 3}}, {-1, {3, 2}}, {1, {1, 1, 3}}, {1, {1, 2, 2}}, {1, {2, 1, 2}}})
      want.add_term(a, c);
    CHECK(oqs_pieri({1, 2}, 2, Strip::horizontal) == want);
    CHECK(oqs_pieri({2, 1}, 0, Strip::horizontal) == OqsLin(Composition{2, 1}));
    for (const auto& a : compositions_of(3))
      for (const auto& g : compositions_of(3)) CHECK(oc_coefficient(a, {}, g) == (a == g ? 1 : 0));
    auto y = ync_pieri({}, 1, Strip::horizontal);
    REQUIRE(y.size() == 1);
    CHECK(y.begin()->first == Composition{1});
    CHECK(y.begin()->second.coeff == 1);
    CHECK(y.begin()->second.chains == 1);
  }

  TEST_CASE("encodings") {
    auto t = parse_syct(".,.,2/.,4/1,3,5");
    CHECK(t.base == Composition{2, 1});
    CHECK(format_syct(t) == ".,.,2/.,4/1,3,5");
  }
}
