#include <doctest.h>

#include "wdvv/poleexpr.hpp"

using namespace wdvv;

TEST_CASE("atomize roots at the smallest eligible variable") {
  auto [c, a] = atomize(MultiPoly::var("b2") - MultiPoly::var("b1"));
  CHECK(a.var == "b1");
  CHECK(c == Rat(-1));
  CHECK(a.shift == MultiPoly::var("b2"));
  auto [c2, a2] = atomize(MultiPoly::var("b1") * 2 + MultiPoly::var("d1"));
  CHECK(a2.var == "b1");
  CHECK(c2 == Rat(2));
  CHECK(a2.shift == -(MultiPoly::var("d1")) / Rat(2));
}

TEST_CASE("pole numerators reduce modulo the atom") {
  Atom a{"b1", MultiPoly::var("b2")};
  // (b1 - b2 + 3)/(b1 - b2) = 1 + 3/(b1 - b2)
  MultiPoly num = MultiPoly::var("b1") - MultiPoly::var("b2") + MultiPoly(Rat(3));
  PoleExpr e = PoleExpr::pole(a, 1, num);
  CHECK(e.poly() == MultiPoly(Rat(1)));
  REQUIRE(e.pole_terms().size() == 1);
  CHECK(e.pole_terms().begin()->second == MultiPoly(Rat(3)));
  // a numerator divisible by the atom squared collapses entirely
  MultiPoly lin = a.linear();
  PoleExpr f = PoleExpr::pole(a, 2, lin * lin * MultiPoly::var("k1"));
  CHECK(f.is_polynomial());
  CHECK(f.poly() == MultiPoly::var("k1"));
}

TEST_CASE("addition cancels matching pole terms") {
  Atom a{"b1", MultiPoly::var("b2")};
  PoleExpr e = PoleExpr::pole(a, 1, MultiPoly::var("k1"));
  PoleExpr f = PoleExpr::pole(a, 1, -MultiPoly::var("k1"));
  CHECK((e + f).is_zero());
}

TEST_CASE("derivative raises the pole order") {
  Atom a{"b1", MultiPoly::var("b2")};
  PoleExpr e = PoleExpr::pole(a, 1, MultiPoly::var("k1"));
  PoleExpr d1 = e.derivative("b1");
  PoleExpr expect1 = PoleExpr::pole(a, 2, -MultiPoly::var("k1"));
  CHECK(d1 == expect1);
  PoleExpr d2 = e.derivative("b2");
  PoleExpr expect2 = PoleExpr::pole(a, 2, MultiPoly::var("k1"));
  CHECK(d2 == expect2);
  CHECK(e.derivative("k1") == PoleExpr::pole(a, 1, MultiPoly(Rat(1))));
}

TEST_CASE("divide_by_atom matches multiplication") {
  Atom k{"k1", MultiPoly()};
  MultiPoly num = MultiPoly::var("k1") * MultiPoly::var("k2");
  Atom a{"b1", MultiPoly::var("b2")};
  PoleExpr e = PoleExpr::pole(a, 1, num) + PoleExpr(MultiPoly::var("k1", 2));
  PoleExpr q = e.divide_by_atom(k);
  CHECK(q * MultiPoly::var("k1") == e);
  // dividing 1/(b1-b2) by k1 produces a genuine division failure
  PoleExpr bad = PoleExpr::pole(a, 1, MultiPoly(Rat(1)));
  CHECK_THROWS(bad.divide_by_atom(k));
}

TEST_CASE("substitution re-roots atoms") {
  Atom a{"b1", MultiPoly::var("b2")};
  PoleExpr e = PoleExpr::pole(a, 1, MultiPoly::var("k2"));
  // b2 -> -b1 turns 1/(b1-b2) into (1/2)/b1
  PoleExpr s = e.substitute("b2", -MultiPoly::var("b1"));
  Atom b1{"b1", MultiPoly()};
  CHECK(s == PoleExpr::pole(b1, 1, MultiPoly::var("k2") / Rat(2)));
  // collapsing the locus throws
  CHECK_THROWS(e.substitute("b2", MultiPoly::var("b1")));
}

TEST_CASE("evaluation sums polynomial and pole parts") {
  Atom a{"b1", MultiPoly::var("b2")};
  PoleExpr e = PoleExpr(MultiPoly::var("b1")) + PoleExpr::pole(a, 2, MultiPoly(Rat(3)));
  std::map<std::string, Rat> pt{{"b1", Rat(5)}, {"b2", Rat(3)}};
  CHECK(e.eval(pt) == Rat(5) + Rat(3, 4));
}

TEST_CASE("reduce_fracs performs partial fraction splitting") {
  // (2 b1 - b2 - b3) / ((b1-b2)(b1-b3)) = 1/(b1-b2) + 1/(b1-b3)
  Atom a12{"b1", MultiPoly::var("b2")};
  Atom a13{"b1", MultiPoly::var("b3")};
  FactoredFrac f1;
  f1.num = MultiPoly::var("b1") * Rat(2) - MultiPoly::var("b2") - MultiPoly::var("b3");
  f1.den[a12] = 1;
  f1.den[a13] = 1;
  PoleExpr r = reduce_fracs({f1});
  PoleExpr expect = PoleExpr::pole(a12, 1, MultiPoly(Rat(1))) +
                    PoleExpr::pole(a13, 1, MultiPoly(Rat(1)));
  CHECK(r == expect);
  std::map<std::string, Rat> pt{{"b1", Rat(9)}, {"b2", Rat(2)}, {"b3", Rat(-4)}};
  Rat direct = (Rat(2) * Rat(9) - Rat(2) - Rat(-4)) /
               ((Rat(9) - Rat(2)) * (Rat(9) - Rat(-4)));
  CHECK(r.eval(pt) == direct);
  // a sum that is not expressible with single linear-power denominators throws
  FactoredFrac bad;
  bad.num = MultiPoly::var("b1") + MultiPoly::var("b3");
  bad.den[a12] = 1;
  bad.den[a13] = 1;
  CHECK_THROWS(reduce_fracs({bad}));
  // sums whose poles cancel reduce to pure polynomials
  FactoredFrac g1, g2;
  g1.num = MultiPoly::var("b2") * MultiPoly::var("k1");
  g1.den[a12] = 1;
  g2.num = -MultiPoly::var("b2") * MultiPoly::var("k1");
  g2.den[a12] = 1;
  CHECK(reduce_fracs({g1, g2}).is_zero());
}
