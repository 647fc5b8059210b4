#include <doctest.h>

#include "wdvv/frobenius.hpp"
#include "wdvv/superpotential.hpp"

using namespace wdvv;

namespace {
WaterBag wb(unsigned N, unsigned M) {
  return WaterBag::make(WaterBagSpecData{N, M, Flavor::Generic, {}});
}
size_t idx(const CTensor& c, const std::string& name) {
  for (size_t i = 0; i < c.coords.size(); ++i)
    if (c.coords[i].name == name) return i;
  REQUIRE(false);
  return 0;
}
PoleExpr entry(const CTensor& c, const std::string& a, const std::string& b,
               const std::string& d) {
  return c.at(idx(c, a), idx(c, b), idx(c, d));
}
}  // namespace

TEST_CASE("structure constants for one log pole over rank two") {
  WaterBag w = wb(2, 1);
  CTensor c = c_closed(w);
  MultiPoly s1 = MultiPoly::var("s1");
  MultiPoly b1 = MultiPoly::var("b1");
  MultiPoly k1 = MultiPoly::var("k1");

  CHECK(entry(c, "s1", "s1", "s1") == PoleExpr(s1 / Rat(9)));
  CHECK(entry(c, "s1", "s1", "s2").is_zero());
  CHECK(entry(c, "s1", "s2", "s2") == PoleExpr(MultiPoly(Rat(-1, 3))));
  CHECK(entry(c, "s2", "s2", "s2").is_zero());
  CHECK(entry(c, "b1", "s1", "s1") == PoleExpr(k1 / Rat(3)));
  CHECK(entry(c, "b1", "s1", "s2").is_zero());
  CHECK(entry(c, "b1", "s2", "s2").is_zero());
  CHECK(entry(c, "b1", "b1", "s1") == PoleExpr(k1 * b1));
  CHECK(entry(c, "b1", "b1", "s2") == PoleExpr(k1));
  CHECK(entry(c, "b1", "b1", "b1") ==
        PoleExpr(k1 * (b1 * b1 * Rat(3) + s1)));
}

TEST_CASE("log pole triples for two poles") {
  WaterBag w = wb(1, 2);
  CTensor c = c_closed(w);
  MultiPoly b1 = MultiPoly::var("b1");
  MultiPoly b2 = MultiPoly::var("b2");
  MultiPoly k1 = MultiPoly::var("k1");
  MultiPoly k2 = MultiPoly::var("k2");
  Atom a12{"b1", b2};  // the linear form b1 - b2

  // c(b1,b1,b2) = k1 k2 / (b2 - b1)
  PoleExpr expect112 = PoleExpr::pole(a12, 1, -(k1 * k2));
  CHECK(entry(c, "b1", "b1", "b2") == expect112);
  // c(b1,b2,b2) = k1 k2 / (b1 - b2)
  PoleExpr expect122 = PoleExpr::pole(a12, 1, k1 * k2);
  CHECK(entry(c, "b1", "b2", "b2") == expect122);
  // c(b1,b1,b1) = k1*lambda_plus'(b1) + k1 k2 / (b1 - b2)
  PoleExpr expect111 =
      PoleExpr(k1 * b1 * Rat(2)) + PoleExpr::pole(a12, 1, k1 * k2);
  CHECK(entry(c, "b1", "b1", "b1") == expect111);
  PoleExpr expect222 = PoleExpr(k2 * b2 * Rat(2)) - PoleExpr::pole(a12, 1, k1 * k2);
  CHECK(entry(c, "b2", "b2", "b2") == expect222);
}

TEST_CASE("residue oracle reproduces the closed structure constants") {
  for (auto [N, M] : {std::pair<unsigned, unsigned>{1, 1}, {2, 1}, {1, 2}}) {
    WaterBag w = wb(N, M);
    CTensor closed = c_closed(w);
    CTensor oracle = c_oracle(w);
    size_t n = closed.coords.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j)
        for (size_t l = j; l < n; ++l)
          CHECK(closed.at(i, j, l) == oracle.at(i, j, l));
  }
}

TEST_CASE("flat pushforward matches the hand table for one pole") {
  WaterBag w = wb(2, 1);
  CTensor raw = c_closed(w);
  CTensor flat = push_to_flat(raw, w, flat_map(w));
  MultiPoly t2 = MultiPoly::var("t2");
  MultiPoly b1 = MultiPoly::var("b1");
  MultiPoly k1 = MultiPoly::var("k1");

  CHECK(entry(flat, "t1", "t1", "t2") == PoleExpr(MultiPoly(Rat(-1, 3))));
  CHECK(entry(flat, "t2", "t2", "t2") == PoleExpr(t2 / Rat(9)));
  CHECK(entry(flat, "t2", "t2", "b1") == PoleExpr(k1 / Rat(3)));
  CHECK(entry(flat, "t1", "b1", "b1") == PoleExpr(k1));
  CHECK(entry(flat, "t2", "b1", "b1") == PoleExpr(k1 * b1));
  CHECK(entry(flat, "b1", "b1", "b1") ==
        PoleExpr(k1 * (b1 * b1 * Rat(3) + t2)));
  CHECK(entry(flat, "t1", "t1", "t1").is_zero());
  CHECK(entry(flat, "t1", "t1", "b1").is_zero());
  CHECK(entry(flat, "t1", "t2", "t2").is_zero());
  CHECK(entry(flat, "t1", "t2", "b1").is_zero());
}
