#include <doctest.h>

#include "wdvv/frobenius.hpp"
#include "wdvv/superpotential.hpp"

using namespace wdvv;

namespace {
WaterBag wb(unsigned N, unsigned M) {
  return WaterBag::make(WaterBagSpecData{N, M, Flavor::Generic, {}});
}
PoleExpr entry(const Metric& m, const std::string& a, const std::string& b) {
  size_t ia = m.coords.size(), ib = m.coords.size();
  for (size_t i = 0; i < m.coords.size(); ++i) {
    if (m.coords[i].name == a) ia = i;
    if (m.coords[i].name == b) ib = i;
  }
  REQUIRE(ia < m.coords.size());
  REQUIRE(ib < m.coords.size());
  return m.at(ia, ib);
}
}  // namespace

TEST_CASE("A2 metric in the s chart") {
  Metric m = metric_closed(wb(2, 0));
  CHECK(entry(m, "s1", "s2") == PoleExpr(MultiPoly(Rat(-1, 3))));
  CHECK(entry(m, "s1", "s1").is_zero());
  CHECK(entry(m, "s2", "s2").is_zero());
}

TEST_CASE("A3 metric in the s chart") {
  Metric m = metric_closed(wb(3, 0));
  CHECK(entry(m, "s1", "s1") == PoleExpr(MultiPoly::var("s1") / Rat(8)));
  CHECK(entry(m, "s1", "s2").is_zero());
  CHECK(entry(m, "s1", "s3") == PoleExpr(MultiPoly(Rat(-1, 4))));
  CHECK(entry(m, "s2", "s2") == PoleExpr(MultiPoly(Rat(-1, 4))));
  CHECK(entry(m, "s2", "s3").is_zero());
  CHECK(entry(m, "s3", "s3").is_zero());
}

TEST_CASE("log block is diagonal with residue weights") {
  Metric m = metric_closed(wb(2, 2));
  CHECK(entry(m, "b1", "b1") == PoleExpr(MultiPoly::var("k1")));
  CHECK(entry(m, "b2", "b2") == PoleExpr(MultiPoly::var("k2")));
  CHECK(entry(m, "b1", "b2").is_zero());
  CHECK(entry(m, "s1", "b1").is_zero());
  CHECK(entry(m, "s2", "b2").is_zero());
}

TEST_CASE("residue oracle reproduces the closed metric") {
  for (auto [N, M] : {std::pair<unsigned, unsigned>{1, 1}, {2, 1}, {1, 2}}) {
    WaterBag w = wb(N, M);
    Metric closed = metric_closed(w);
    Metric oracle = metric_oracle(w);
    REQUIRE(closed.coords.size() == oracle.coords.size());
    for (size_t i = 0; i < closed.coords.size(); ++i)
      for (size_t j = i; j < closed.coords.size(); ++j)
        CHECK(closed.at(i, j) == oracle.at(i, j));
  }
}

TEST_CASE("rational tail block is constant in the x chart") {
  WaterBag w =
      WaterBag::make(WaterBagSpecData{1, 1, Flavor::Rational, {RationalPole{2}}});
  Metric closed = metric_closed(w);
  CHECK(entry(closed, "x1_1", "x1_3") == PoleExpr(MultiPoly(Rat(-1, 2))));
  CHECK(entry(closed, "x1_2", "x1_2") == PoleExpr(MultiPoly(Rat(-1, 2))));
  CHECK(entry(closed, "x1_1", "x1_1").is_zero());
  CHECK(entry(closed, "x1_1", "x1_2").is_zero());
  CHECK(entry(closed, "x1_1", "b1").is_zero());
  CHECK(entry(closed, "x1_2", "s1").is_zero());

  Metric oracle = metric_oracle(w);
  for (size_t i = 0; i < closed.coords.size(); ++i)
    for (size_t j = i; j < closed.coords.size(); ++j)
      CHECK(closed.at(i, j) == oracle.at(i, j));
}

TEST_CASE("pushforward to flat coordinates is antidiagonal") {
  WaterBag w = wb(3, 1);
  Metric flat = push_to_flat(metric_closed(w), w, flat_map(w));
  Metric expect = metric_closed_flat(w);
  REQUIRE(flat.coords.size() == expect.coords.size());
  for (size_t i = 0; i < flat.coords.size(); ++i)
    for (size_t j = i; j < flat.coords.size(); ++j)
      CHECK(flat.at(i, j) == expect.at(i, j));
}

TEST_CASE("flat inverse contracts to the identity") {
  WaterBag w = wb(2, 2);
  Metric eta = metric_closed_flat(w);
  InverseMetric inv = metric_flat_inverse(w);
  size_t n = eta.coords.size();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      PoleExpr acc;
      for (size_t c = 0; c < n; ++c) {
        PoleExpr lhs = eta.at(a, c);
        REQUIRE(lhs.is_polynomial());
        acc = acc + inv.ginv[c][b] * lhs.poly();
      }
      if (a == b)
        CHECK(acc == PoleExpr(MultiPoly(Rat(1))));
      else
        CHECK(acc.is_zero());
    }
  }
}
