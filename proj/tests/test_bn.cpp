#include <doctest.h>

#include "wdvv/bn_reduce.hpp"

using namespace wdvv;

TEST_CASE("even-sector restriction N=1 M=1: chart and metric") {
  BnRestricted R = bn_restrict(1, 1);
  REQUIRE(R.coords.size() == 3);  // t1, t3, b1
  CHECK(R.coords[0].name == "t1");
  CHECK(R.coords[1].name == "t3");
  CHECK(R.coords[2].name == "b1");
  CHECK(R.eta[0][1] == PoleExpr(MultiPoly(Rat(-1) / Rat(4))));
  CHECK(R.eta[0][0].is_zero());
  CHECK(R.eta[2][2] == PoleExpr(MultiPoly::var("k1") * Rat(2)));
  CHECK(R.eta[0][2].is_zero());
}

TEST_CASE("even-sector restriction N=1 M=1: full report") {
  CheckReport rep = bn_restriction_check(1, 1, 5, 31);
  for (const auto& w : rep.witnesses) INFO(w);
  CHECK(rep.pass);
}

TEST_CASE("even-sector restriction N=2 M=1: full report") {
  CheckReport rep = bn_restriction_check(2, 1, 5, 32);
  for (const auto& w : rep.witnesses) INFO(w);
  CHECK(rep.pass);
}
