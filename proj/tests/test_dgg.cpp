#include "doctest.h"
#include "qhopf/graph.hpp"

#include <fstream>

using namespace qhopf;

namespace {

std::vector<std::string> read_lines(const std::string& name) {
  std::ifstream in(std::string(QHOPF_GOLDEN_DIR) + "/" + name + ".txt");
  REQUIRE(in.good());
  std::vector<std::string> lines;
  for (std::string s; std::getline(in, s);)
    if (!s.empty()) lines.push_back(s);
  return lines;
}

}  // namespace

TEST_SUITE("dgg") {
  TEST_CASE("golden edge lists to rank 3") {
    std::vector<std::tuple<std::string, std::string, std::string>> cases{
        {"young", "young", "young_prime"}, {"comp", "comp_L", "comp_P"},
        {"perm", "perm", "perm_prime"},    {"tab", "tab", "tab_prime"}};
    for (const auto& [name, first, second] : cases) {
      CAPTURE(name);
      auto pr = build_named_pair(name, 3);
      CHECK(edge_lines(pr.first, 3) == read_lines(first));
      CHECK(edge_lines(pr.second, 3) == read_lines(second));
    }
  }

  TEST_CASE("signed Young edge signs") {
    auto pr = build_signed_young(3);
    CHECK(pr.first.weight("1,1", "2,1") == LaurentPoly(1));
    CHECK(pr.first.weight("2", "2,1") == LaurentPoly(-1));
    CHECK(pr.first.weight("2", "1,1,1") == LaurentPoly(0));
  }

  TEST_CASE("duality") {
    auto y = build_signed_young(5);
    CHECK(check_duality(y.first, y.second, LaurentPoly(-1), LaurentPoly(1), 4).ok);
    auto c = build_composition_poset_pair(5);
    CHECK(check_duality(c.first, c.second, LaurentPoly(-1), LaurentPoly(1), 4).ok);
    auto p = build_perm_pair(4);
    CHECK(check_duality(p.first, p.second, LaurentPoly::q(), LaurentPoly(1), 3).ok);
    auto t = build_tab_pair(4);
    CHECK(check_duality(t.first, t.second, LaurentPoly::q(), LaurentPoly(1), 3).ok);
    // wrong parameter must fail
    CHECK_FALSE(check_duality(y.first, y.second, LaurentPoly(1), LaurentPoly(1), 3).ok);
  }

  TEST_CASE("path weights") {
    auto p = build_perm_pair(4);
    LaurentPoly total;
    for (const auto& [v, w] : path_weights(p.second))
      if (p.second.rank_of.at(v) == 3) total += w * path_weights(p.first).at(v);
    CHECK(total == q_factorial(3));
    auto y = build_signed_young(3);
    CHECK(path_weight(y.first, {"-", "1", "2", "2,1"}) == LaurentPoly(-1));
  }

  TEST_CASE("up and down") {
    auto y = build_signed_young(2);
    auto x = up(y.first, VertexLin("1"));
    CHECK(x.coefficient_of("2") == LaurentPoly(1));
    CHECK(x.coefficient_of("1,1") == LaurentPoly(1));
    CHECK(down(y.second, VertexLin("1")).coefficient_of("-") == LaurentPoly(1));
    CHECK_THROWS(up(y.first, VertexLin("2")));
  }

  TEST_CASE("graphs from dual Hopf data") {
    CHECK(gauge_equivalent(from_dual_hopf(osym_dual_data(), 3), build_signed_young(3), 3));
    auto ync = from_dual_hopf(young_noncommutative_data(), 3);
    auto comp = build_composition_poset_pair(3);
    CHECK(edge_lines(ync.first, 3) == edge_lines(comp.first, 3));
    CHECK(edge_lines(ync.second, 3) == edge_lines(comp.second, 3));
  }

  TEST_CASE("serialization") {
    auto y = build_signed_young(2);
    auto j = to_json(y.first);
    CHECK(j.contains("name"));
    CHECK(to_dot(y.first).find("digraph") != std::string::npos);
  }
}
