#include "doctest.h"
#include "qhopf/word.hpp"

using namespace qhopf;

TEST_SUITE("words") {
  TEST_CASE("standardization") {
    CHECK(standardize(parse_word("324123")) == parse_word("426135"));
    CHECK(standardize(parse_word("123")) == parse_word("123"));
    CHECK(standardize(parse_word("22")) == parse_word("12"));
  }

  TEST_CASE("statistics") {
    CHECK(inversions(parse_word("3124")) == 2);
    CHECK(inversions(parse_word("1234")) == 0);
    CHECK(descent_composition(parse_word("213")) == Composition{1, 2});
  }

  TEST_CASE("q-shuffle and the MR products") {
    auto s = q_shuffle<LaurentPoly>({1}, {2});
    CHECK(s.coefficient_of({1, 2}) == LaurentPoly(1));
    CHECK(s.coefficient_of({2, 1}) == LaurentPoly::q());
    CHECK(q_shuffle<LaurentPoly>({2, 1}, {}) == ModuleElement<Word, LaurentPoly>(Word{2, 1}));
    CHECK(shifted_q_concat_product<LaurentPoly>({1}, {1}) == s);
    auto m = mr_product<LaurentPoly>({1}, {1});
    CHECK(m.size() == 2);
    CHECK(mr_product<LaurentPoly>({1, 2}, {1}).size() == 3);
    CHECK(mr_product<LaurentPoly>({}, {2, 1}).size() == 1);
  }

  TEST_CASE("213 shuffled with 45 at q = -1") {
    // the F-expansion of F_12 F_2 as printed, up to the overall sign
    ModuleElement<Composition, long long> f;
    for (const auto& [w, c] : q_shuffle<long long>({2, 1, 3}, {4, 5})) f.add_term(descent_composition(w), c);
    ModuleElement<Composition, long long> want;
    for (auto [c, a] : std::vector<std::pair<long long, Composition>>{
             {1, {1, 4}}, {-2, {1, 2, 2}}, {1, {2, 3}}, {-1, {1, 1, 3}}, {1, {1, 3, 1}},
             {-1, {2, 2, 1}}, {1, {3, 2}}, {1, {1, 1, 2, 1}}, {1, {2, 1, 2}}})
      want.add_term(a, c);
    CHECK(f == want);
  }

  TEST_CASE("RSK") {
    auto r = rsk(parse_word("324123"));
    CHECK(format_tableau(r.p) == "1,2,3/2,4/3");
    CHECK(row_word(r.p) == parse_word("324123"));
    CHECK(rsk_inverse(r.p, r.q) == parse_word("324123"));
    CHECK(format_tableau(rsk(parse_word("1234")).p) == "1,2,3,4");
  }

  TEST_CASE("Knuth classes of S_3") {
    auto cl = knuth_classes(3);
    std::vector<std::vector<Permutation>> want{{{1, 2, 3}}, {{1, 3, 2}, {3, 1, 2}}, {{2, 1, 3}, {2, 3, 1}}, {{3, 2, 1}}};
    CHECK(cl == want);
  }

  TEST_CASE("word encodings") {
    CHECK(format_word({}) == "-");
    CHECK(format_word({3, 1, 2}) == "312");
    CHECK(format_word({3, 10}) == "3,10");
    CHECK(parse_word("3,10") == Word{3, 10});
  }
}
