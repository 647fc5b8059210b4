#include <doctest.h>

#include <random>

#include "wdvv/residues.hpp"

using namespace wdvv;

TEST_CASE("residue at infinity of p^{n}/(p-r)^{n+1} is one") {
  for (unsigned n = 0; n <= 3; ++n) {
    MultiPoly r = MultiPoly::var("r1");
    RationalFunction f;
    f.num = UPoly::x(n);
    f.den.push_back(DenFactor{UPoly::linear(r), n + 1, r, {}});
    // expansion p^n/(p-r)^{n+1} = 1/p + ..., puncture residue is -1
    CHECK(residue_at_infinity(f) == MultiPoly(Rat(-1)));
  }
}

TEST_CASE("simple pole residue is the evaluated cofactor") {
  // 1/((p-r1)(p-r2)) at r1 -> 1/(r1-r2)
  MultiPoly r1 = MultiPoly::var("r1"), r2 = MultiPoly::var("r2");
  RationalFunction f;
  f.num = UPoly(MultiPoly(Rat(1)));
  f.den.push_back(DenFactor{UPoly::linear(r1), 1, r1, {}});
  f.den.push_back(DenFactor{UPoly::linear(r2), 1, r2, {}});
  PoleExpr res = residue_at_pole(f, r1, 1);
  auto [c, atom] = atomize(r1 - r2);
  PoleExpr expect = PoleExpr::pole(atom, 1, MultiPoly(Rat(1) / c));
  CHECK(res == expect);
  // multiplicity must match the tracked exponent
  CHECK_THROWS(residue_at_pole(f, r1, 2));
}

TEST_CASE("double pole residue applies the quotient rule") {
  // q(p)/(p-r)^2 has residue q'(r)
  MultiPoly r = MultiPoly::var("r1");
  UPoly q = UPoly::x(3) + UPoly::x(1) * MultiPoly::var("u") + UPoly(MultiPoly(Rat(5)));
  RationalFunction f;
  f.num = q;
  f.den.push_back(DenFactor{UPoly::linear(r), 2, r, {}});
  PoleExpr res = residue_at_pole(f, r, 2);
  CHECK(res == PoleExpr(q.derivative().eval(r)));
}

TEST_CASE("all residues of a rational function sum to zero") {
  std::mt19937 rng(424243);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int it = 0; it < 25; ++it) {
    // numerator of degree <= 4 over three distinct symbolic simple poles
    std::vector<MultiPoly> nc(5);
    for (auto& c : nc) c = MultiPoly(Rat(coef(rng)));
    UPoly num(std::move(nc));
    if (num.is_zero()) continue;
    RationalFunction f;
    f.num = num;
    std::vector<MultiPoly> roots;
    for (int j = 1; j <= 3; ++j) {
      MultiPoly r = MultiPoly::var("r" + std::to_string(j));
      roots.push_back(r);
      f.den.push_back(DenFactor{UPoly::linear(r), 1, r, {}});
    }
    std::vector<FactoredFrac> raws;
    for (const auto& r : roots) raws.push_back(residue_at_pole_raw(f, r, 1));
    PoleExpr total = PoleExpr(residue_at_infinity(f)) + reduce_fracs(raws);
    CHECK(total.is_zero());
  }
}

TEST_CASE("higher multiplicities also satisfy the residue theorem") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int it = 0; it < 15; ++it) {
    std::vector<MultiPoly> nc(6);
    for (auto& c : nc) c = MultiPoly(Rat(coef(rng)));
    UPoly num(std::move(nc));
    if (num.is_zero()) continue;
    RationalFunction f;
    f.num = num;
    MultiPoly r1 = MultiPoly::var("r1"), r2 = MultiPoly::var("r2");
    f.den.push_back(DenFactor{UPoly::linear(r1), 3, r1, {}});
    f.den.push_back(DenFactor{UPoly::linear(r2), 2, r2, {}});
    std::vector<FactoredFrac> raws{residue_at_pole_raw(f, r1, 3),
                                   residue_at_pole_raw(f, r2, 2)};
    PoleExpr total = PoleExpr(residue_at_infinity(f)) + reduce_fracs(raws);
    CHECK(total.is_zero());
  }
}

TEST_CASE("nonlinear factors use the supplied factored value") {
  // f = 1/((p-r1)(p^2 - r2^2)); at r1 the quadratic factor evaluates to
  // (r1-r2)(r1+r2), supplied in factored form
  MultiPoly r1 = MultiPoly::var("r1"), r2 = MultiPoly::var("r2");
  RationalFunction f;
  f.num = UPoly(MultiPoly(Rat(1)));
  f.den.push_back(DenFactor{UPoly::linear(r1), 1, r1, {}});
  UPoly quad = UPoly::x(2) - UPoly(r2 * r2);
  FactoredValue fv;
  auto [c1, a1] = atomize(r1 - r2);
  auto [c2, a2] = atomize(r1 + r2);
  fv.scale = c1 * c2;
  fv.atoms[a1] += 1;
  fv.atoms[a2] += 1;
  f.den.push_back(DenFactor{quad, 1, std::nullopt, {{r1, fv}}});
  FactoredFrac raw = residue_at_pole_raw(f, r1, 1);
  CHECK(raw.num == MultiPoly(Rat(1)));
  CHECK(raw.den.size() == 2);
}
