#include <doctest.h>

#include "wdvv/superpotential.hpp"

using namespace wdvv;

namespace {
WaterBag wb(unsigned N, unsigned M) {
  return WaterBag::make(WaterBagSpecData{N, M, Flavor::Generic, {}});
}
}  // namespace

TEST_CASE("lambda_plus has no subleading power") {
  WaterBag w = wb(3, 0);
  UPoly lp = w.lambda_plus();
  CHECK(lp.degree() == 4);
  CHECK(lp.coeff(4) == MultiPoly(Rat(1)));
  CHECK(lp.coeff(3).is_zero());
  CHECK(lp.coeff(2) == MultiPoly::var("s1"));
  CHECK(lp.coeff(1) == MultiPoly::var("s2"));
  CHECK(lp.coeff(0) == MultiPoly::var("s3"));
}

TEST_CASE("nu expands lambda' against the pole product") {
  WaterBag w = wb(1, 1);
  // nu = 2p(p-b1) + k1
  UPoly expect = UPoly::x(1) * Rat(2) * UPoly::linear(MultiPoly::var("b1")) +
                 UPoly(MultiPoly::var("k1"));
  CHECK(w.nu() == expect);
}

TEST_CASE("nu at a log pole matches the factored identity") {
  WaterBag w = wb(2, 2);
  FactoredValue fv = w.nu_at_b(1);
  // k1 * (b1 - b2)
  CHECK(fv.scale == Rat(1));
  CHECK(fv.atoms.size() == 2);
  MultiPoly recon(fv.scale);
  for (const auto& [a, e] : fv.atoms) recon = recon * a.linear().pow(e);
  CHECK(recon == w.nu().eval(MultiPoly::var("b1")));
}

TEST_CASE("bn flavor doubles the underlying data") {
  WaterBag w = WaterBag::make(WaterBagSpecData{1, 1, Flavor::BN, {}});
  CHECK(w.N() == 3);
  CHECK(w.M() == 2);
  CHECK(w.coords_raw().size() == 5);
}

TEST_CASE("rational tail maps x block to polynomial v and a") {
  WaterBagSpecData sd{1, 0, Flavor::Rational, {RationalPole{1}}};
  WaterBag w1 = WaterBag::make(sd);
  auto v1 = w1.v_of_x(1);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0] == MultiPoly::var("x1_1"));
  CHECK(w1.a_loc(1) == MultiPoly::var("x1_2"));

  sd.rational = {RationalPole{2}};
  WaterBag w2 = WaterBag::make(sd);
  auto v2 = w2.v_of_x(1);
  REQUIRE(v2.size() == 2);
  CHECK(v2[0] == MultiPoly::var("x1_1"));
  CHECK(v2[1] == MultiPoly::var("x1_2", 2) / Rat(4));
  CHECK(w2.a_loc(1) == MultiPoly::var("x1_3") / Rat(2));

  sd.rational = {RationalPole{3}};
  WaterBag w3 = WaterBag::make(sd);
  auto v3 = w3.v_of_x(1);
  REQUIRE(v3.size() == 3);
  CHECK(v3[0] == MultiPoly::var("x1_1"));
  CHECK(v3[1] == MultiPoly::var("x1_2") * MultiPoly::var("x1_3") / Rat(3));
  CHECK(v3[2] == MultiPoly::var("x1_3", 3) / Rat(27));
}

TEST_CASE("nu at a rational pole matches the factored identity") {
  WaterBagSpecData sd{1, 1, Flavor::Rational, {RationalPole{2}}};
  WaterBag w = WaterBag::make(sd);
  FactoredValue fv = w.nu_at_a(1);
  MultiPoly recon(fv.scale);
  for (const auto& [a, e] : fv.atoms) recon = recon * a.linear().pow(e);
  CHECK(recon == w.nu().eval(w.a_loc(1)));
}

TEST_CASE("grading weights follow the charge assignments") {
  WaterBag w = wb(3, 1);
  auto g = w.grading_weights();
  CHECK(g.at("s1") == Rat(2));
  CHECK(g.at("s3") == Rat(4));
  CHECK(g.at("t1") == Rat(4));
  CHECK(g.at("t3") == Rat(2));
  CHECK(g.at("b1") == Rat(1));
  CHECK(g.at("k1") == Rat(4));
}
