#include <doctest.h>

#include "wdvv/frobenius.hpp"
#include "wdvv/prepotential.hpp"

using namespace wdvv;

namespace {

MultiPoly V(const std::string& n, unsigned e = 1) { return MultiPoly::var(n, e); }
MultiPoly Q(long long n, long long d) { return MultiPoly(Rat(n) / Rat(d)); }

Prepotential integrate_case(const WaterBagSpecData& spec) {
  WaterBag w = WaterBag::make(spec);
  FlatChart fc = flat_map(w);
  CTensor c = push_to_flat(c_closed(w), w, fc);
  return integrate_F(w, c);
}

}  // namespace

TEST_CASE("prepotential N=2 M=1: five monomials, single k cofactor") {
  Prepotential P = integrate_case({2, 1});
  MultiPoly F0 = Q(-1, 6) * V("t1", 2) * V("t2") + Q(1, 216) * V("t2", 4);
  MultiPoly F1 = Q(1, 6) * V("t2", 2) * V("b1") + Q(1, 2) * V("t1") * V("b1", 2) +
                 Q(1, 6) * V("t2") * V("b1", 3) + Q(1, 20) * V("b1", 5);
  CHECK(P.F0 == F0);
  REQUIRE(P.F1.count(1) == 1);
  CHECK(P.F1.at(1) == F1);
  CHECK(P.gamma.empty());
  CHECK(P.F_poly == F0 + V("k1") * F1);
  CHECK(third_derivative_mismatch(P, push_to_flat(c_closed(WaterBag::make({2, 1})),
                                                  WaterBag::make({2, 1}),
                                                  flat_map(WaterBag::make({2, 1}))))
            .empty());
}

TEST_CASE("prepotential N=1 M=1: cubic plus quartic tail") {
  Prepotential P = integrate_case({1, 1});
  CHECK(P.F0 == Q(-1, 12) * V("t1", 3));
  CHECK(P.F1.at(1) ==
        Q(1, 2) * V("t1") * V("b1", 2) + Q(1, 12) * V("b1", 4));
  CHECK(P.gamma.empty());
}

TEST_CASE("prepotential N=1 M=2: log coefficient k1 k2 / 4") {
  Prepotential P = integrate_case({1, 2});
  CHECK(P.F0 == Q(-1, 12) * V("t1", 3));
  CHECK(P.F1.at(1) ==
        Q(1, 2) * V("t1") * V("b1", 2) + Q(1, 12) * V("b1", 4));
  CHECK(P.F1.at(2) ==
        Q(1, 2) * V("t1") * V("b2", 2) + Q(1, 12) * V("b2", 4));
  REQUIRE(P.gamma.size() == 1);
  auto it = P.gamma.begin();
  CHECK(it->first == std::make_pair(1u, 2u));
  CHECK(it->second == Q(1, 4) * V("k1") * V("k2"));
}

TEST_CASE("prepotential N=3 M=0: quintic polynomial") {
  Prepotential P = integrate_case({3, 0});
  MultiPoly F = Q(-1, 8) * V("t1", 2) * V("t3") + Q(-1, 8) * V("t1") * V("t2", 2) +
                Q(1, 64) * V("t2", 2) * V("t3", 2) + Q(-1, 3840) * V("t3", 5);
  CHECK(P.F_poly == F);
  CHECK(P.F0 == F);
  CHECK(P.F1.empty());
  CHECK(P.gamma.empty());
}

TEST_CASE("prepotential rejects non-integrable tensors") {
  WaterBag w = WaterBag::make({2, 0});
  FlatChart fc = flat_map(w);
  CTensor real = push_to_flat(c_closed(w), w, fc);

  SUBCASE("conflicting monomial determinations") {
    CTensor c;
    c.coords = real.coords;
    c.set(0, 0, 1, PoleExpr(V("t2")));
    c.set(0, 1, 1, PoleExpr(MultiPoly(2) * V("t1")));
    CHECK_THROWS_AS(integrate_F(w, c), std::domain_error);
  }
  SUBCASE("entry with no antiderivative partner") {
    CTensor c;
    c.coords = real.coords;
    c.set(0, 0, 0, PoleExpr(V("t2")));
    CHECK_THROWS_AS(integrate_F(w, c), std::domain_error);
  }
}

TEST_CASE("prepotential rejects poles outside the log pattern") {
  WaterBag w = WaterBag::make({1, 2});
  FlatChart fc = flat_map(w);
  CTensor real = push_to_flat(c_closed(w), w, fc);

  SUBCASE("second-order pole") {
    CTensor c;
    c.coords = real.coords;
    c.set(1, 1, 2, PoleExpr::pole(Atom{"b1", V("b2")}, 2, MultiPoly(1)));
    CHECK_THROWS_AS(integrate_F(w, c), std::domain_error);
  }
  SUBCASE("pole attached to a non-log entry") {
    CTensor c;
    c.coords = real.coords;
    c.set(0, 0, 1, PoleExpr::pole(Atom{"b1", V("b2")}, 1, MultiPoly(1)));
    CHECK_THROWS_AS(integrate_F(w, c), std::domain_error);
  }
}
