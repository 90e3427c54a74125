#include "vfib/seifert.hpp"

#include <doctest.h>

#include <random>

using namespace vfib;
using namespace vfib::seifert;
using tangle::parse_montesinos;

TEST_CASE("euler number of the double branched cover") {
  CHECK(euler_number(parse_montesinos("(1/5, 1/5, 1/5)")) == Rat(-3, 5));
  CHECK(euler_number(parse_montesinos("(0/3, 0/3, 0/3, 0/3)")) == 0);

  // Independent oracle: sum the fractions directly, then negate.
  auto link = parse_montesinos("(2/7, 3/7, -5/7, 1/7)");
  Rat by_hand = 0;
  for (const auto& t : link.tangles) by_hand += Rat(t.q, t.p);
  CHECK(euler_number(link) == -by_hand);
  CHECK(euler_number(link) == Rat(-1, 7));

  CHECK_THROWS_AS(euler_number(parse_montesinos("(1/5, 1/4)")), std::invalid_argument);
}

TEST_CASE("orbifold euler characteristic") {
  CHECK(orbifold_euler_char(parse_montesinos("(1/5, 1/5, 1/5)")) == Rat(-2, 5));
  CHECK(orbifold_euler_char(parse_montesinos("(1/3, 1/3, 1/3)")) == 0);
  CHECK(orbifold_euler_char(parse_montesinos("(1/3, 1/3, 1/3, 1/3)")) == Rat(-2, 3));
}

TEST_CASE("geometry classification") {
  std::string reason;
  CHECK(classify_geometry(Rat(-3, 5), Rat(-2, 5), &reason) == Geometry::SL2Tilde);
  CHECK(classify_geometry(Rat(0), Rat(-2, 3), &reason) == Geometry::Other);
  CHECK(reason == "e(W_K) = 0");
  CHECK(classify_geometry(Rat(-1), Rat(0), &reason) == Geometry::Other);
  CHECK(reason == "chi_orb >= 0");
}

TEST_CASE("cover euler data") {
  auto worked = cover_euler_data(parse_montesinos("(1/5, 1/5, 1/5)"));
  CHECK(worked.e == -15);
  CHECK(worked.e_tilde == -3);
  CHECK(worked.e_tilde_odd);

  auto link_case = cover_euler_data(parse_montesinos("(1/5, 1/5, 2/5)"));
  CHECK(link_case.e == -20);
  CHECK(link_case.e_tilde == -4);
  CHECK_FALSE(link_case.e_tilde_odd);

  auto case2 = cover_euler_data(parse_montesinos("(1/3, 1/3, 1/3, 1/3)"));
  CHECK(case2.e == -12);
  CHECK(case2.e_tilde == -4);

  CHECK_THROWS_AS(cover_euler_data(parse_montesinos("(1/5, 1/5, -2/5)")),
                  std::invalid_argument);
}

TEST_CASE("e(W_K) * p^2 == e on random gated input") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> q(-9, 9);
  for (int iter = 0; iter < 300; ++iter) {
    long long p = 3 + 2 * (iter % 7);
    tangle::MontesinosLink link;
    int n = 3 + iter % 4;
    for (int i = 0; i < n; ++i) link.tangles.push_back({q(rng), p});
    if (link.sum_q() == 0) continue;
    auto data = cover_euler_data(link);
    CHECK(euler_number(link) * p * p == Rat(data.e));
    CHECK(data.e == data.e_tilde * p);
    CHECK((data.e_tilde % 2 != 0) ==
          (tangle::component_count(link) == tangle::LinkClass::Knot));
  }
}
