#include <doctest.h>

#include "wdvv/pseries.hpp"

using namespace wdvv;

TEST_CASE("reciprocal multiplies back to one") {
  size_t ord = 8;
  std::vector<MultiPoly> c(ord);
  c[0] = MultiPoly(Rat(4));
  c[2] = MultiPoly::var("s1") * 2;
  c[3] = MultiPoly::var("s2");
  PSeries f(std::move(c), ord);
  PSeries g = f.reciprocal();
  CHECK(f * g == PSeries::one(ord));
}

TEST_CASE("rational power matches binomial expansion") {
  // (1+x)^{1/2} has coefficients binom(1/2, n)
  size_t ord = 6;
  std::vector<MultiPoly> c(ord);
  c[0] = MultiPoly(Rat(1));
  c[1] = MultiPoly(Rat(1));
  PSeries f(std::move(c), ord);
  PSeries g = f.pow_rational(Rat(1, 2));
  CHECK(g.coeff(0) == MultiPoly(Rat(1)));
  CHECK(g.coeff(1) == MultiPoly(Rat(1, 2)));
  CHECK(g.coeff(2) == MultiPoly(Rat(-1, 8)));
  CHECK(g.coeff(3) == MultiPoly(Rat(1, 16)));
  CHECK(g.coeff(4) == MultiPoly(Rat(-5, 128)));
  // and squaring recovers 1+x
  PSeries sq = g * g;
  CHECK(sq.coeff(0) == MultiPoly(Rat(1)));
  CHECK(sq.coeff(1) == MultiPoly(Rat(1)));
  for (size_t n = 2; n < ord; ++n) CHECK(sq.coeff(n).is_zero());
}

TEST_CASE("rational power with symbolic coefficients squares back") {
  size_t ord = 7;
  std::vector<MultiPoly> c(ord);
  c[0] = MultiPoly(Rat(1));
  c[2] = MultiPoly::var("s1");
  c[3] = MultiPoly::var("s2");
  PSeries f(std::move(c), ord);
  PSeries r = f.pow_rational(Rat(1, 4));
  PSeries r4 = r * r * r * r;
  CHECK(r4 == f);
}

TEST_CASE("reversion composes to the identity") {
  size_t ord = 8;
  std::vector<MultiPoly> c(ord);
  c[1] = MultiPoly(Rat(1));
  c[2] = MultiPoly::var("u");
  c[4] = MultiPoly::var("w") * Rat(-3);
  PSeries f(std::move(c), ord);
  PSeries g = f.revert();
  CHECK(f.compose(g) == PSeries::x(ord));
  CHECK(g.compose(f) == PSeries::x(ord));
}

TEST_CASE("reversion reproduces the Catalan generating series") {
  // f = x - x^2 has inverse g with g_n = Catalan(n-1)
  size_t ord = 8;
  std::vector<MultiPoly> c(ord);
  c[1] = MultiPoly(Rat(1));
  c[2] = MultiPoly(Rat(-1));
  PSeries f(std::move(c), ord);
  PSeries g = f.revert();
  long long cat[8] = {0, 1, 1, 2, 5, 14, 42, 132};
  for (size_t n = 1; n < ord; ++n) CHECK(g.coeff(n) == MultiPoly(Rat(cat[n])));
}
