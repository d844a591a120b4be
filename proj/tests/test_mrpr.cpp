#include "doctest.h"
#include "qhopf/mrpr.hpp"

using namespace qhopf;

namespace {
using LP = LaurentPoly;
const LP q = LP::q();
PermLin<LP> W(const Permutation& w) { return PermLin<LP>(w); }
}  // namespace

TEST_SUITE("mrpr") {
  TEST_CASE("coproducts") {
    auto d = mr_coproduct_q<LP>(W({2, 1}));
    CHECK(d.size() == 3);
    CHECK(d.coefficient_of({{1}, {1}}) == q);
    CHECK(d.coefficient_of({{}, {2, 1}}) == LP(1));
    auto dp = mr_prime_coproduct<LP>(W({2, 1}));
    CHECK(dp.coefficient_of({{1}, {1}}) == LP(1));
    auto d1 = mr_prime_coproduct<LP>(W({1}));
    CHECK(d1.size() == 2);
    for (const auto& [kl, c] : mr_coproduct_q<LP>(W({1, 2, 3}))) CHECK(c == LP(1));
  }

  TEST_CASE("inversion split identity") {
    for (const auto& w : permutations_of(5))
      for (int i = 0; i <= 5; ++i) {
        Permutation lo, hi;
        for (int x : w) (x <= i ? lo : hi).push_back(x);
        CHECK(inv_split(i, w) + inversions(lo) + inversions(standardize(hi)) == inversions(w));
      }
  }

  TEST_CASE("products") {
    CHECK(mr_prime_mul<LP>(W({1}), W({1})) == W({1, 2}) + W({2, 1}) * q);
    CHECK(mr_mul<LP>(W({1}), W({1})) == W({1, 2}) + W({2, 1}));
  }

  TEST_CASE("maps between the towers") {
    CHECK(theta_q<LP>(W({2, 1})) == W({2, 1}) * q);
    CHECK(theta_q<LP>(W({3, 1, 2})) == W({2, 3, 1}) * (q * q));
    CHECK(iota_q_ribbon<LP>(CompLin<LP>(Composition{1, 1})) == W({2, 1}));
    CHECK(iota_q<LP>(CompLin<LP>(Composition{2})) == W({1, 2}));
    CHECK(pi_prime_q<LP>(W({2, 1, 3})) == CompLin<LP>(Composition{1, 2}));
    // theta is multiplicative on S2 x S2
    for (const auto& a : permutations_of(2))
      for (const auto& b : permutations_of(2))
        CHECK(theta_q<LP>(mr_mul<LP>(W(a), W(b))) == mr_prime_mul<LP>(theta_q<LP>(W(a)), theta_q<LP>(W(b))));
  }

  TEST_CASE("the quotient by J_q") {
    auto a = jq_normal_form<LP>(W({3, 1, 2, 4}));
    CHECK(a == jq_normal_form<LP>(W({1, 3, 2, 4})) * q);
    CHECK(a == jq_normal_form<LP>(W({1, 3, 4, 2})));
  }

  TEST_CASE("PR'") {
    Tableau box = parse_tableau("1");
    auto p = pr_prime_product<LP>(TabLin<LP>(box), TabLin<LP>(box));
    CHECK(p == TabLin<LP>(parse_tableau("1,2")) + TabLin<LP>(parse_tableau("1/2")));
    CHECK(pr_prime_product<LP>(TabLin<LP>(Tableau{}), TabLin<LP>(box)) == TabLin<LP>(box));
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& t1 : all_syt(k))
          for (const auto& t2 : all_syt(n - k))
            CHECK(regroup_cq<LP>(mr_prime_mul<LP>(cq<LP>(t1), cq<LP>(t2))).has_value());
  }

  TEST_CASE("commuting diagram") {
    auto rep = diagram_check(4);
    CHECK_MESSAGE(rep.ok, rep.failure);
  }
}
