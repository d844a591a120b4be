#include "doctest.h"
#include "cli.hpp"

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qhopf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("expand") {
    auto r = run({"expand", "--odd-schur", "2,1,1", "--basis", "M"});
    CHECK(r.code == 0);
    CHECK(r.out == "-M[2,1,1] + M[1,2,1] - M[1,1,2] - M[1,1,1,1]\n");
    CHECK(run({"expand", "--oqs", "2,3", "--basis", "S"}).out == "S[2,3]\n");
    CHECK(run({"expand", "--odd-schur", "2,1", "--basis", "m"}).out == "-m[2,1]\n");
    auto j = run({"expand", "--odd-schur", "2", "--basis", "F", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"basis\"") != std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    auto r = run({"expand", "--odd-schur", "1,2", "--basis", "M"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not a partition") != std::string::npos);
    CHECK(run({"expand", "--odd-schur", "2", "--oqs", "2"}).code == 2);
    CHECK(run({"graph", "--name", "nope"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("products and pairings") {
    CHECK(run({"lr", "--la", "2,1", "--mu", "1"}).out == "la\tmu\tnu\toc\n2,1\t1\t2,1,1\t1\n2,1\t1\t2,2\t1\n2,1\t1\t3,1\t-1\n");
    CHECK(run({"pieri", "--composition", "1,2", "--n", "2"}).out ==
          "-S[3,2] - S[2,3] + S[2,1,2] + S[1,4] + S[1,2,2] + S[1,1,3]\n");
    CHECK(run({"pair", "--left", "F:2,1", "--right", "R:2,1"}).out == "1\n");
    CHECK(run({"pair", "--kind", "inner", "--left", "H:2,1", "--right", "H:1,2"}).out == "1 + q^2\n");
    CHECK(run({"qshuffle", "--alpha", "1", "--beta", "1"}).out == "(1)*M[2] + (1 + q)*M[1,1]\n");
  }

  TEST_CASE("rsk") {
    auto r = run({"rsk", "--word", "324123"});
    CHECK(r.code == 0);
    CHECK(r.out.find("P: 1,2,3/2,4/3") != std::string::npos);
  }

  TEST_CASE("graph output is deterministic") {
    auto a = run({"graph", "--name", "young", "--rank", "3", "--format", "json"});
    auto b = run({"graph", "--name", "young", "--rank", "3", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"graph", "--name", "comp", "--format", "dot"}).out.find("digraph") != std::string::npos);
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "odd", "--max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  }
}
