#include "doctest.h"
#include "qhopf/nsym.hpp"

using namespace qhopf;

namespace {
using LP = LaurentPoly;
const LP q = LP::q();
CompLin<LP> H(const Composition& a) { return CompLin<LP>(a); }
}  // namespace

TEST_SUITE("nsym") {
  TEST_CASE("product and ribbons") {
    CHECK(h_product<LP>(H({2}), H({1, 3})) == H({2, 1, 3}));
    CHECK(h_product<LP>(H({}), H({2, 1})) == H({2, 1}));
    // R_a = sum over coarsenings b of a of (-1)^{l(a)-l(b)} H_b
    CHECK(r_to_h<LP>(H({2})) == H({2}));
    CHECK(r_to_h<LP>(H({1, 1})) == H({1, 1}) - H({2}));
    CHECK(h_to_r<LP>(r_to_h<LP>(H({2, 1, 1}))) == H({2, 1, 1}));
    CHECK(h_to_e<LP>(e_to_h<LP>(H({1, 2}))) == H({1, 2}));
  }

  TEST_CASE("bicharacter") {
    CHECK(theta<LP>({1, 0}, {0, 1}) == LP(1));
    CHECK(theta<LP>({0, 1}, {1, 0}) == q);
    CHECK(theta<LP>({2, 1}, {0, 0}) == LP(1));
  }

  TEST_CASE("coproduct") {
    auto d = coproduct_q<LP>(H({2}));
    CHECK(d.size() == 3);
    CHECK(d.coefficient_of({{1}, {1}}) == LP(1));
    auto d11 = coproduct_q<LP>(H({1, 1}));
    CHECK(d11.coefficient_of({{1}, {1}}) == 1 + q);
    CHECK(d11.coefficient_of({{}, {1, 1}}) == LP(1));
    CHECK(d11.coefficient_of({{1, 1}, {}}) == LP(1));
  }

  TEST_CASE("canonical pairing") {
    CHECK(canonical_pair<LP>(CompLin<LP>(Composition{2, 1}), H({2, 1})) == LP(1));
    CHECK(canonical_pair<LP>(f_to_m<LP>(CompLin<LP>(Composition{2, 1})), r_to_h<LP>(H({2, 1}))) == LP(1));
    CHECK(canonical_pair<LP>(h_elem<LP>(2), H({1, 1})) == LP(1));
  }

  TEST_CASE("forgetful map and forms") {
    CHECK(phi<LP>(H({2, 1})) == m_product<LP>(h_elem<LP>(2), h_elem<LP>(1)));
    CHECK(phi<LP>(e_to_h<LP>(H({2}))) == e_elem<LP>(2) * q);
    CHECK(phi<LP>(H({})) == CompLin<LP>(Composition{}));
    CHECK(inner_form<LP>(H({3}), H({3})) == LP(1));
    CHECK(inner_form<LP>(H({1, 1}), H({1, 1})) == 1 + q);
    CHECK(ribbon_form<LP>({3}, {3}) == LP(1));
    CHECK(ribbon_form<LP>({1, 1}, {1, 1}) == q);
  }

  TEST_CASE("automorphisms") {
    CHECK(psi3<LP>(H({2, 1})) == H({1, 2}));
    CHECK(psi1<LP>(H({1})) == H({1}));
    for (const auto& a : compositions_of(4)) {
      CHECK(psi3<LP>(psi3<LP>(H(a))) == H(a));
      for (const auto& b : compositions_of(4))
        CHECK(inner_form<LP>(psi1<LP>(H(a)), H(b)) == inner_form<LP>(H(a), psi1<LP>(H(b))));
    }
  }

  TEST_CASE("odd kernel") {
    auto gens = odd_kernel_generators(4);
    REQUIRE(!gens.empty());
    for (const auto& g : gens) CHECK(phi<long long>(g.h).empty());
    CHECK(odd_kernel_span(1).empty());
  }
}
