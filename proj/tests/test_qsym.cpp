#include "doctest.h"
#include "qhopf/qsym.hpp"

using namespace qhopf;

namespace {
using LP = LaurentPoly;
const LP q = LP::q();
CompLin<LP> M(const Composition& a) { return CompLin<LP>(a); }
}  // namespace

TEST_SUITE("qsym") {
  TEST_CASE("quasishuffle") {
    CHECK(q_quasishuffle<LP>({}, {2, 1}) == M({2, 1}));
    CHECK(q_quasishuffle<LP>({2, 1}, {}) == M({2, 1}));
    auto p = q_quasishuffle<LP>({1}, {1});
    CHECK(p.coefficient_of({1, 1}) == 1 + q);
    CHECK(p.coefficient_of({2}) == LP(1));
    // at q = 1 this is the classical quasishuffle 2 M11 + M2
    CHECK(p.coefficient_of({1, 1}).eval(1) == 2);
    // the printed merge exponent q^{a1 b1} differs already here
    CHECK(q_quasishuffle<LP>({1}, {1}, MergeRule::printed).coefficient_of({2}) == q);
  }

  TEST_CASE("normal-ordered monomials") {
    auto x = monomial_expand<LP>(M({1}), 2);
    CHECK(x.size() == 2);
    CHECK(x.coefficient_of({1, 0}) == LP(1));
    MonoLin<LP> x1(WeakComposition{1, 0}), x2(WeakComposition{0, 1});
    CHECK(normal_order_multiply<LP>(x2, x1) == MonoLin<LP>(WeakComposition{1, 1}, q));
    CHECK(normal_order_multiply<LP>(x1, x2) == MonoLin<LP>(WeakComposition{1, 1}));
    auto mm = monomial_expand<LP>(m_product<LP>(M({1}), M({1})), 3);
    CHECK(mm == normal_order_multiply<LP>(monomial_expand<LP>(M({1}), 3), monomial_expand<LP>(M({1}), 3)));
  }

  TEST_CASE("bases") {
    CHECK(f_to_m<LP>(M({2})) == M({2}) + M({1, 1}));
    CHECK(m_to_f<LP>(M({1, 1})) == M({1, 1}));
    CHECK(m_to_f<LP>(M({2})) == M({2}) - M({1, 1}));
    CHECK(h_elem<LP>(2) == M({2}) + M({1, 1}));
    CHECK(e_elem<LP>(3) == M({1, 1, 1}));
    CHECK(representative_permutation({1, 2}) == Permutation{2, 1, 3});
  }

  TEST_CASE("F-product at q = -1") {
    CompLin<long long> f12(Composition{1, 2}), f2(Composition{2});
    auto p = f_product<long long>(f12, f2);
    CompLin<long long> want;
    for (auto [c, a] : std::vector<std::pair<long long, Composition>>{
             {1, {1, 4}}, {-2, {1, 2, 2}}, {1, {2, 3}}, {-1, {1, 1, 3}}, {1, {1, 3, 1}},
             {-1, {2, 2, 1}}, {1, {3, 2}}, {1, {1, 1, 2, 1}}, {1, {2, 1, 2}}})
      want.add_term(a, c);
    CHECK(p == want);
    CHECK(f_product<long long>(f2, CompLin<long long>(Composition{})) == f2);
  }

  TEST_CASE("coproducts") {
    auto d = coproduct_m<LP>(M({2, 1}));
    CHECK(d.size() == 3);
    CHECK(d.coefficient_of({{2}, {1}}) == LP(1));
    auto df = coproduct_f<LP>(M({2}));
    CHECK(df.size() == 3);
    CHECK(df.coefficient_of({{1}, {1}}) == LP(1));
  }

  TEST_CASE("generating function identity") {
    for (int n = 1; n <= 4; ++n) CHECK(ce_identity<LP>(n).empty());
  }
}
