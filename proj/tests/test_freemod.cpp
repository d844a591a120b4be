#include "doctest.h"
#include "qhopf/qsym.hpp"

using namespace qhopf;

namespace {
using LP = LaurentPoly;
const LP q = LP::q();
LP delta(const Composition& a, const Composition& b) { return a == b ? LP(1) : LP(0); }
}  // namespace

TEST_SUITE("freemod") {
  TEST_CASE("linear combinations") {
    CompLin<LP> x(Composition{2});
    x.add_term({1, 1}, q);
    CHECK(x + CompLin<LP>() == x);
    CHECK(x.coefficient_of({1, 1}) == q);
    CHECK((x - x).empty());
    CHECK((x * LP(0)).empty());
    x.add_term({1, 1}, -q);
    CHECK(x.size() == 1);
  }

  TEST_CASE("pairings") {
    CHECK(pair(delta, CompLin<LP>(Composition{2, 1}), CompLin<LP>(Composition{2, 1})) == LP(1));
    CHECK(pair(delta, CompLin<LP>(Composition{2, 1}), CompLin<LP>(Composition{1, 2})) == LP(0));
    CHECK(pair(delta, CompLin<LP>(), CompLin<LP>(Composition{1})) == LP(0));
    auto m1 = CompLin<LP>(Composition{1}), m2 = CompLin<LP>(Composition{2});
    CHECK(tensor_pair<Composition, Composition, Composition, Composition>(delta, delta, tensor(m1, m1), tensor(m1, m1)) == LP(1));
    CHECK(tensor_pair<Composition, Composition, Composition, Composition>(delta, delta, tensor(m1, m2), tensor(m2, m1)) == LP(0));
  }

  TEST_CASE("braiding") {
    auto deg = [](const Permutation& w) { return static_cast<int>(w.size()); };
    Tensor<Permutation, Permutation, LP> x;
    x.add_term({{2, 1}, {1, 3, 2}}, 1);
    auto f = q_flip(x, deg, deg);
    CHECK(f.coefficient_of({{1, 3, 2}, {2, 1}}) == LP::monomial(6));
    Tensor<Permutation, Permutation, LP> unit;
    unit.add_term({{}, {}}, 1);
    CHECK(q_flip(unit, deg, deg) == unit);
  }

  TEST_CASE("braided tensor product") {
    auto cat = [](const Composition& a, const Composition& b) { return CompLin<LP>(concat(a, b)); };
    auto deg = [](const Composition& a) { return weight(a); };
    CompTensor<LP> x, y, u;
    x.add_term({{1}, {1}}, 1);
    y.add_term({{1}, {}}, 1);
    auto p = braided_tensor_product(cat, cat, x, y, deg, deg);
    CHECK(p.coefficient_of({{1, 1}, {1}}) == q);
    u.add_term({{}, {}}, 1);
    CHECK(braided_tensor_product(cat, cat, u, u, deg, deg) == u);
  }
}
