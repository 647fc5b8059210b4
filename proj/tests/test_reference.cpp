#include <doctest.h>

#include "wdvv/numeric.hpp"
#include "wdvv/reference.hpp"

using namespace wdvv;

TEST_CASE("example suite passes with the expected match grades") {
  auto results = run_example_suite();
  REQUIRE(results.size() == 8);
  std::map<std::string, std::string> want{
      {"A3 polynomial prepotential (N=3, M=0)", "match-up-to-documented-sign"},
      {"two-log deformation of the trivial potential (N=0, M=2)",
       "exact-match"},
      {"single-log cubic potential (N=2, M=1)",
       "match-up-to-documented-sign"},
      {"quadratic potential with two logs (N=1, M=2)", "exact-match"},
      {"even-sector restriction (N=1, M=1)", "exact-match"},
      {"mixed pole-and-log potential", "numeric-pass"},
      {"Legendre-type transform of the mixed example", "numeric-pass"},
      {"k-zero degeneration", "exact-match"}};
  for (const auto& r : results) {
    INFO(r.name, ": ", r.status, " (", r.detail, ")");
    CHECK(r.pass);
    REQUIRE(want.count(r.name) == 1);
    CHECK(r.status == want[r.name]);
  }
}

TEST_CASE("the displayed transform has slips the numeric check catches") {
  std::vector<std::map<std::string, Cplx>> pts{
      {{"T1", 0.7L}, {"T2", -0.9L}, {"T3", 0.4L}, {"k", 1.1L}},
      {{"T1", -1.2L}, {"T2", 0.5L}, {"T3", -0.8L}, {"k", 0.6L}}};
  auto bad = numeric_wdvv(legendre_F_display(), {"T1", "T2", "T3"}, pts,
                          1e-9L, "T2");
  bool any_fail = false;
  for (const auto& r : bad) any_fail = any_fail || !r.pass;
  CHECK(any_fail);
  auto good = numeric_wdvv(legendre_F_corrected(), {"T1", "T2", "T3"}, pts,
                           1e-9L, "T2");
  for (const auto& r : good) {
    INFO(r.point, " residual ", r.max_residual);
    CHECK(r.pass);
  }
}

TEST_CASE("the two transform forms differ by the two slipped terms") {
  // display = corrected - T1^2 T2 / 4 + T1 / 4 - k T2 T3^2 / 2
  ExprPtr T1 = Expr::variable("T1"), T2 = Expr::variable("T2"),
          T3 = Expr::variable("T3"), k = Expr::variable("k");
  ExprPtr delta = Expr::constant(Rat(1) / 4) * T1 -
                  Expr::constant(Rat(1) / 4) * Expr::ipow(T1, 2) * T2 -
                  Expr::constant(Rat(1) / 2) * k * T2 * Expr::ipow(T3, 2);
  std::map<std::string, Cplx> pt{
      {"T1", 0.3L}, {"T2", 1.7L}, {"T3", -0.6L}, {"k", 0.9L}};
  Cplx lhs = legendre_F_display()->eval(pt);
  Cplx rhs = (legendre_F_corrected() + delta)->eval(pt);
  CHECK(std::abs(lhs - rhs) < 1e-17L);
}
