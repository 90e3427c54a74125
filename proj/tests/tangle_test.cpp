#include "vfib/tangle.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace vfib;
using namespace vfib::tangle;

TEST_CASE("parse worked instance") {
  auto link = parse_montesinos("(1/5, 1/5, 1/5)");
  REQUIRE(link.n() == 3);
  for (const auto& t : link.tangles) {
    CHECK(t.q == 1);
    CHECK(t.p == 5);
  }
}

TEST_CASE("parse zero numerators and whitespace insensitivity") {
  auto link = parse_montesinos(" ( 0/3 ,0/3,  0 / 3 , 0/3 ) ");
  REQUIRE(link.n() == 4);
  for (const auto& t : link.tangles) {
    CHECK(t.q == 0);
    CHECK(t.p == 3);
  }
}

TEST_CASE("parse keeps order and signs, below-n-3 lists parse fine") {
  auto link = parse_montesinos("(1/5, -3/5)");
  REQUIRE(link.n() == 2);
  CHECK(link.tangles[0] == TangleFraction{1, 5});
  CHECK(link.tangles[1] == TangleFraction{-3, 5});
  CHECK_FALSE(validate_theorem_hypotheses(link).applicable());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_montesinos("(1/5, 1/5"), ParseError);
  CHECK_THROWS_AS(parse_montesinos("()"), ParseError);
  CHECK_THROWS_AS(parse_montesinos("(1/1, 1/5)"), ParseError);   // p < 2
  CHECK_THROWS_AS(parse_montesinos("(1/5),"), ParseError);       // trailing
  CHECK_THROWS_AS(parse_montesinos("(a/5)"), ParseError);
  CHECK_THROWS_AS(parse_montesinos("(1/-5)"), ParseError);       // sign on q only
  try {
    parse_montesinos("(1/5, 1/0)");
    FAIL("expected ParseError");
  } catch (const ParseError& ex) {
    CHECK(ex.position == 8);
  }
}

TEST_CASE("round trip: parse after format is the identity") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long long> q(-50, 50);
  std::uniform_int_distribution<long long> p(2, 40);
  std::uniform_int_distribution<int> len(1, 9);
  for (int iter = 0; iter < 300; ++iter) {
    MontesinosLink link;
    int n = len(rng);
    for (int i = 0; i < n; ++i) link.tangles.push_back({q(rng), p(rng)});
    CHECK(parse_montesinos(format_montesinos(link)) == link);
  }
}

TEST_CASE("component count parity rule") {
  CHECK(component_count(parse_montesinos("(1/5, 1/5, 1/5)")) == LinkClass::Knot);
  CHECK(component_count(parse_montesinos("(1/5, 1/5, 2/5)")) == LinkClass::TwoComponentLink);
  CHECK(component_count(parse_montesinos("(0/3, 0/3, 0/3, 0/3)")) ==
        LinkClass::TwoComponentLink);
}

TEST_CASE("hypothesis gate case tags") {
  CHECK(validate_theorem_hypotheses(parse_montesinos("(1/5, 1/5, 1/5)")).case_tag ==
        CaseTag::Case1);
  CHECK(validate_theorem_hypotheses(parse_montesinos("(1/3, 1/3, 1/3, 1/3)")).case_tag ==
        CaseTag::Case2);

  auto boundary = validate_theorem_hypotheses(parse_montesinos("(1/3, 1/3, 1/3)"));
  CHECK(boundary.case_tag == CaseTag::NotApplicable);
  CHECK(boundary.p_odd);
  CHECK(boundary.p_ge_3);

  CHECK_FALSE(validate_theorem_hypotheses(parse_montesinos("(1/4, 1/4, 1/4)")).applicable());
  CHECK_FALSE(validate_theorem_hypotheses(parse_montesinos("(1/5, 1/4, 1/5)")).applicable());
  CHECK_FALSE(validate_theorem_hypotheses(parse_montesinos("(1/5, 1/5, -2/5)")).applicable());
}

TEST_CASE("gate implications re-derived on random sweeps") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> q(-6, 6);
  std::uniform_int_distribution<long long> p(2, 15);
  std::uniform_int_distribution<int> len(1, 7);
  for (int iter = 0; iter < 500; ++iter) {
    MontesinosLink link;
    int n = len(rng);
    long long pv = p(rng);
    for (int i = 0; i < n; ++i) link.tangles.push_back({q(rng), pv});
    auto rep = validate_theorem_hypotheses(link);
    if (rep.case_tag != CaseTag::NotApplicable) {
      CHECK(rep.sum_q != 0);
      CHECK(pv % 2 == 1);
      CHECK(pv >= 3);
      if (rep.case_tag == CaseTag::Case1) {
        CHECK(n == 3);
        CHECK(pv >= 5);
      } else {
        CHECK(n > 3);
      }
    }
  }
}
