#include "doctest.h"
#include "qhopf/odd.hpp"

using namespace qhopf;

TEST_SUITE("odd_schur") {
  TEST_CASE("single tableaux") {
    CHECK(odd_schur_of_tableau(parse_tableau("1")) == OddLin(Composition{1}));
    CHECK(odd_schur_f({2}) == OddLin(Composition{2}));
  }

  TEST_CASE("s211 in the M basis") {
    OddLin want;
    want.add_term({2, 1, 1}, -1);
    want.add_term({1, 2, 1}, 1);
    want.add_term({1, 1, 2}, -1);
    want.add_term({1, 1, 1, 1}, -1);
    CHECK(odd_schur_m({2, 1, 1}) == want);
  }

  TEST_CASE("rows and columns") {
    for (int n = 1; n <= 5; ++n) {
      OddLin all;
      for (const auto& a : compositions_of(n)) all.add_term(a, 1);
      CHECK(odd_schur_m({n}) == all);
      CHECK(odd_schur_m(Partition(n, 1)) == OddLin(Composition(n, 1), sign_pow(binom2(n))));
    }
  }

  TEST_CASE("products") {
    PartLin want;
    want.add_term({2}, 1);
    want.add_term({1, 1}, 1);
    CHECK(odd_lr_row({1}, {1}) == want);
    CHECK(odd_product_f_route({1}, {1}) == want);
    CHECK(odd_lr({2, 1}, {1}, {2, 2}) == odd_product_f_route({2, 1}, {1}).coefficient_of({2, 2}));
    CHECK(odd_lr({2}, {1}, {1, 1, 1}) == 0);
  }

  TEST_CASE("Pieri") {
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= 3; ++k)
        for (const auto& la : partitions_of(k))
          for (auto kind : {Strip::horizontal, Strip::vertical}) {
            auto blk = kind == Strip::horizontal ? Partition{n} : Partition(n, 1);
            CHECK(odd_pieri(la, n, kind) == odd_product_f_route(la, blk));
            CHECK(odd_pieri_closed(la, n, kind) == odd_pieri(la, n, kind));
          }
  }

  TEST_CASE("expansions and the inner form") {
    CHECK(h_expansion({1}) == PartLin(Partition{1}));
    auto h21 = h_expansion({2, 1});
    for (const auto& mu : partitions_of(3)) CHECK(h21.coefficient_of(mu) == odd_kostka(mu, {2, 1}));
    CHECK(osym_inner({2, 1}, {2, 1}) == -1);
    CHECK(osym_inner({2, 1}, {3}) == 0);
  }

  TEST_CASE("membership") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& t : all_syt(n)) CHECK(osym_membership(odd_schur_of_tableau(t), n));
    CHECK_FALSE(osym_membership(m_to_f<long long>(OddLin(Composition{1, 2})), 3));
    CHECK(osym_membership(OddLin(), 3));
  }

  TEST_CASE("decomposition") {
    auto x = s_decompose(odd_schur_f({2, 1}));
    REQUIRE(x.has_value());
    CHECK(*x == PartLin(Partition{2, 1}));
    CHECK_FALSE(s_decompose(OddLin(Composition{1, 2})).has_value());
  }
}
