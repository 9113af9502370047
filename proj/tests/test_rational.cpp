#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pavelka/rational.hpp"

using namespace pavelka;

static UnitRational r(int p, int q) { return UnitRational(p, q); }

TEST_CASE("canonical form") {
  CHECK(r(2, 4) == r(1, 2));
  CHECK(r(0, 7) == UnitRational::zero());
  CHECK(r(5, 5) == UnitRational::one());
  CHECK(r(-1, -2) == r(1, 2));
  CHECK_THROWS_AS(r(3, 2), ValueError);
  CHECK_THROWS_AS(r(-1, 2), ValueError);
  CHECK_THROWS_AS(r(1, 0), ValueError);
}

TEST_CASE("ordering") {
  CHECK(r(1, 3) < r(1, 2));
  CHECK(r(2, 3) <= r(2, 3));
  CHECK(r(3, 4) > r(2, 3));
}

TEST_CASE("mv operations") {
  CHECK(mv_neg(r(1, 3)) == r(2, 3));
  CHECK(mv_disj(r(2, 3), r(2, 3)) == UnitRational::one());
  CHECK(mv_disj(r(1, 3), r(1, 4)) == r(7, 12));
  CHECK(mv_conj(r(2, 3), r(2, 3)) == r(1, 3));
  CHECK(mv_conj(r(1, 3), r(1, 4)) == UnitRational::zero());
  CHECK(mv_imp(r(1, 2), r(1, 3)) == r(5, 6));
  CHECK(mv_imp(r(1, 3), r(1, 2)) == UnitRational::one());
  CHECK(mv_imp(r(2, 3), r(2, 3)) == UnitRational::one());
  CHECK(mv_min(r(1, 2), r(1, 3)) == r(1, 3));
  CHECK(mv_max(r(1, 2), r(1, 3)) == r(1, 2));
}

TEST_CASE("iterated operations") {
  CHECK(mv_pow(r(3, 4), 2) == r(1, 2));
  CHECK(mv_pow(r(1, 3), 3) == UnitRational::zero());
  CHECK(mv_pow(r(2, 3), 1) == r(2, 3));
  CHECK(mv_nmul(r(1, 4), 2) == r(1, 2));
  CHECK(mv_nmul(r(1, 3), 4) == UnitRational::one());
  CHECK_THROWS_AS(mv_pow(r(1, 2), 0), ValueError);
  CHECK_THROWS_AS(mv_nmul(r(1, 2), 0), ValueError);
}

TEST_CASE("de morgan duality of pow and nmul") {
  for (int p = 0; p <= 5; ++p) {
    for (int n = 1; n <= 4; ++n) {
      UnitRational x(p, 5);
      CHECK(mv_pow(x, n) == mv_neg(mv_nmul(mv_neg(x), n)));
    }
  }
}

TEST_CASE("text round trip") {
  CHECK(r(1, 2).str() == "1/2");
  CHECK(UnitRational::zero().str() == "0");
  CHECK(UnitRational::one().str() == "1");
  CHECK(UnitRational::parse("2/4") == r(1, 2));
  CHECK(UnitRational::parse("0") == UnitRational::zero());
  CHECK(UnitRational::parse("1") == UnitRational::one());
  CHECK_THROWS_AS(UnitRational::parse("3/2"), ValueError);
  CHECK_THROWS_AS(UnitRational::parse("x"), ValueError);
  CHECK_THROWS_AS(UnitRational::parse(""), ValueError);
}
