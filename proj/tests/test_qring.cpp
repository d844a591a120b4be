#include "doctest.h"
#include "qhopf/laurent.hpp"

using namespace qhopf;

namespace {
const LaurentPoly q = LaurentPoly::q();
LaurentPoly qi(int e) { return LaurentPoly::monomial(e); }
}  // namespace

TEST_SUITE("qring") {
  TEST_CASE("addition and cancellation") {
    CHECK((1 + q) + (qi(-1) - q) == 1 + qi(-1));
    CHECK((q * q + (-(q * q))).is_zero());
    CHECK(((1 + q) + LaurentPoly()) == 1 + q);
  }

  TEST_CASE("multiplication") {
    CHECK((1 + q) * (1 - q) == 1 - q * q);
    CHECK(qi(-1) * q == LaurentPoly(1));
    CHECK((1 + q) * (1 + q) == 1 + 2 * q + q * q);
  }

  TEST_CASE("evaluation") {
    CHECK((1 + q).eval(-1) == 0);
    CHECK(qi(3).eval(-1) == -1);
    CHECK((1 + q + q * q).eval(1) == 3);
    CHECK(to_odd(1 + 2 * q - qi(-3)) == 0);
  }

  TEST_CASE("q-integers") {
    CHECK(q_int(3) == 1 + q + q * q);
    CHECK(q_factorial(0) == LaurentPoly(1));
    CHECK(q_factorial(3) == 1 + 2 * q + 2 * q * q + qi(3));
  }

  TEST_CASE("coefficients beyond 64 bits") {
    LaurentPoly big = 1 + q;
    LaurentPoly p = 1;
    for (int i = 0; i < 80; ++i) p *= big;
    CHECK(p.eval(1) == Int(1) << 80);
    CHECK(p.eval(-1) == 0);
  }

  TEST_CASE("rendering") {
    CHECK((1 - q + 2 * qi(3)).to_string() == "1 - q + 2q^3");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK((1 + qi(-2)).to_json().dump() == R"({"-2":1,"0":1})");
  }
}
