#include "wdvv/reference.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "wdvv/bn_reduce.hpp"
#include "wdvv/flatchart.hpp"
#include "wdvv/frobenius.hpp"
#include "wdvv/numeric.hpp"
#include "wdvv/superpotential.hpp"

namespace wdvv {

namespace {

MultiPoly V(const std::string& n, unsigned e = 1) { return MultiPoly::var(n, e); }
MultiPoly Q(long long n, long long d = 1) { return MultiPoly(Rat(n) / Rat(d)); }

Prepotential integrate_case(const WaterBagSpecData& spec) {
  WaterBag w = WaterBag::make(spec);
  FlatChart fc = flat_map(w);
  CTensor c = push_to_flat(c_closed(w), w, fc);
  return integrate_F(w, c);
}

ExampleResult match_poly(const std::string& name, const MultiPoly& built,
                         const MultiPoly& ref, const std::string& detail = "") {
  ExampleResult r{name, "", false, detail};
  if (built == ref) {
    r.status = "exact-match";
    r.pass = true;
  } else if (built == Q(-1) * ref) {
    r.status = "match-up-to-documented-sign";
    r.pass = true;
  } else {
    r.status = "FAIL: constructed prepotential differs from the reference";
    r.pass = false;
  }
  return r;
}

// deterministic real sample points for the numeric examples
std::vector<std::map<std::string, Cplx>> numeric_points(
    const std::vector<std::string>& names, const std::string& positive_var,
    uint64_t seed, size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::vector<std::map<std::string, Cplx>> pts;
  for (size_t i = 0; i < count; ++i) {
    std::map<std::string, Cplx> pt;
    for (const auto& nm : names) {
      double v = box(rng);
      if (std::abs(v) < 0.25) v += (v >= 0 ? 0.5 : -0.5);
      if (nm == positive_var) v = 0.3 + std::abs(v);
      pt[nm] = Cplx(static_cast<long double>(v));
    }
    pts.push_back(pt);
  }
  return pts;
}

ExampleResult numeric_result(const std::string& name, const ExprPtr& F,
                             const std::vector<std::string>& vars,
                             const std::vector<std::map<std::string, Cplx>>& pts,
                             const std::string& unity,
                             const std::vector<std::vector<ExprPtr>>& eta,
                             const std::string& detail) {
  ExampleResult r{name, "", false, detail};
  auto reports = numeric_wdvv(F, vars, pts, 1e-9L, unity, eta);
  long double worst = 0;
  bool ok = !reports.empty();
  for (const auto& rep : reports) {
    ok = ok && rep.pass;
    worst = std::max(worst, rep.max_residual);
  }
  if (ok) {
    r.status = "numeric-pass";
    r.pass = true;
    char buf[64];
    std::snprintf(buf, sizeof buf, "max residual %.3Le at 10 points", worst);
    r.detail += (r.detail.empty() ? "" : "; ") + std::string(buf);
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max residual %.3Le", worst);
    r.status = std::string("FAIL: numeric residual above 1e-9 (") + buf + ")";
  }
  return r;
}

}  // namespace

MultiPoly reference_F_a3() {
  return Q(1, 8) * V("t1", 2) * V("t3") + Q(1, 8) * V("t1") * V("t2", 2) +
         Q(-1, 64) * V("t2", 2) * V("t3", 2) + Q(1, 3840) * V("t3", 5);
}

MultiPoly reference_F_n2m1() {
  MultiPoly t1 = V("t1"), t2 = V("t2"), b = V("b1"), k = V("k1");
  return Q(1, 6) * t1 * t1 * t2 + Q(-1, 2) * k * t1 * b * b +
         Q(-1, 216) * t2 * t2 * t2 * t2 +
         Q(-1, 6) * k * (t2 * t2 * b + t2 * b * b * b) +
         Q(-1, 20) * k * b * b * b * b * b;
}

MultiPoly reference_F_n1_poly(unsigned M) {
  MultiPoly F = Q(-1, 12) * V("t1", 3);
  for (unsigned i = 1; i <= M; ++i) {
    MultiPoly b = V(WaterBag::b_name(i));
    F += V(WaterBag::k_name(i)) *
         (Q(1, 2) * V("t1") * b * b + Q(1, 12) * b * b * b * b);
  }
  return F;
}

MultiPoly reference_F_n0m2_in_t() {
  MultiPoly p = V("t1") + V("t2"), m = V("t1") + Q(-1) * V("t2");
  return Q(1, 6) * (V("k1") * p * p * p + V("k2") * m * m * m);
}

ExprPtr eaw_F() {
  ExprPtr t1 = Expr::variable("t1"), t2 = Expr::variable("t2"),
          t3 = Expr::variable("t3"), k = Expr::variable("k");
  return Expr::constant(Rat(1) / 12) * Expr::ipow(t1, 3) + t1 * t2 * t3 -
         Expr::constant(Rat(1) / 2) * k * t1 * Expr::ipow(t3, 2) -
         Expr::constant(Rat(3) / 4) * Expr::ipow(t2, 2) +
         Expr::constant(Rat(1) / 2) * Expr::ipow(t2, 2) * Expr::log(t2) +
         Expr::constant(Rat(1) / 3) * t2 * Expr::ipow(t3, 3) -
         Expr::constant(Rat(1) / 12) * k * Expr::ipow(t3, 4);
}

std::vector<std::vector<ExprPtr>> eaw_eta() {
  ExprPtr zero = Expr::constant(0LL), one = Expr::constant(1LL);
  ExprPtr mk = Expr::constant(0LL) - Expr::variable("k");
  return {{Expr::constant(Rat(1) / 2), zero, zero},
          {zero, zero, one},
          {zero, one, mk}};
}

ExprPtr legendre_F_display() {
  ExprPtr T1 = Expr::variable("T1"), T2 = Expr::variable("T2"),
          T3 = Expr::variable("T3"), k = Expr::variable("k");
  return Expr::constant(Rat(1) / 4) * T1 +
         Expr::constant(Rat(1) / 2) * Expr::ipow(T2, 2) * T3 -
         Expr::constant(Rat(1) / 2) * k * T2 * Expr::ipow(T3, 2) -
         Expr::constant(Rat(1) / 96) * Expr::ipow(T1, 4) +
         T1 * Expr::exp(T3) -
         k * (Expr::constant(Rat(1) / 4) * Expr::ipow(T1, 2) * T3 +
              Expr::constant(Rat(1) / 2) * T2 * Expr::ipow(T3, 2)) +
         Expr::constant(Rat(1) / 6) * Expr::ipow(k, 2) * Expr::ipow(T3, 3);
}

ExprPtr legendre_F_corrected() {
  ExprPtr T1 = Expr::variable("T1"), T2 = Expr::variable("T2"),
          T3 = Expr::variable("T3"), k = Expr::variable("k");
  return Expr::constant(Rat(1) / 4) * Expr::ipow(T1, 2) * T2 +
         Expr::constant(Rat(1) / 2) * Expr::ipow(T2, 2) * T3 -
         Expr::constant(Rat(1) / 96) * Expr::ipow(T1, 4) +
         T1 * Expr::exp(T3) -
         k * (Expr::constant(Rat(1) / 4) * Expr::ipow(T1, 2) * T3 +
              Expr::constant(Rat(1) / 2) * T2 * Expr::ipow(T3, 2)) +
         Expr::constant(Rat(1) / 6) * Expr::ipow(k, 2) * Expr::ipow(T3, 3);
}

std::vector<ExampleResult> run_example_suite() {
  std::vector<ExampleResult> out;

  {  // polynomial case N=3, M=0
    Prepotential P = integrate_case({3, 0});
    out.push_back(match_poly("A3 polynomial prepotential (N=3, M=0)",
                             P.F_poly, reference_F_a3()));
  }

  {  // N=0, M=2 in the chart b1 = t1+t2, b2 = t1-t2
    Prepotential P = integrate_case({0, 2});
    std::map<std::string, MultiPoly> chart{
        {"b1", V("t1") + V("t2")}, {"b2", V("t1") + Q(-1) * V("t2")}};
    ExampleResult r =
        match_poly("two-log deformation of the trivial potential (N=0, M=2)",
                   P.F_poly.substitute(chart), reference_F_n0m2_in_t());
    MultiPoly gamma_ref = Q(1, 4) * V("k1") * V("k2");
    if (P.gamma.size() != 1 || P.gamma.begin()->second != gamma_ref) {
      r.status = "FAIL: logarithmic coefficient differs from k1 k2 / 4";
      r.pass = false;
    }
    // identity field: d/db1 + d/db2 satisfies c(x, y, e) = eta(x, y); in the
    // t-chart that is d/dt1
    WaterBag w = WaterBag::make({0, 2});
    FlatChart fc = flat_map(w);
    CTensor c = push_to_flat(c_closed(w), w, fc);
    Metric eta = push_to_flat(metric_closed(w), w, fc);
    for (size_t a = 0; a < 2 && r.pass; ++a)
      for (size_t b = a; b < 2 && r.pass; ++b)
        if (!(c.at(a, b, 0) + c.at(a, b, 1) == eta.at(a, b))) {
          r.status = "FAIL: d/db1 + d/db2 is not the identity field";
          r.pass = false;
        }
    if (r.pass && r.detail.empty())
      r.detail =
          "log part (k1 k2/4)(b1-b2)^2 log (b1-b2)^2 equals "
          "2 k1 k2 t2^2 log t2 up to a quadratic gauge term; identity field "
          "d/db1 + d/db2 = d/dt1 verified";
    out.push_back(r);
  }

  {  // N=2, M=1, five monomials with t3 = b1
    Prepotential P = integrate_case({2, 1});
    out.push_back(match_poly("single-log cubic potential (N=2, M=1)",
                             P.F_poly, reference_F_n2m1()));
  }

  {  // N=1 family at M=2, including the log coefficients
    Prepotential P = integrate_case({1, 2});
    ExampleResult r = match_poly("quadratic potential with two logs (N=1, M=2)",
                                 P.F_poly, reference_F_n1_poly(2));
    MultiPoly gamma_ref = Q(1, 4) * V("k1") * V("k2");
    if (P.gamma.size() != 1 || P.gamma.begin()->second != gamma_ref) {
      r.status = "FAIL: logarithmic coefficient differs from k1 k2 / 4";
      r.pass = false;
    } else if (r.pass) {
      r.detail =
          "log display coefficient 1/8 per ordered pair equals the stored "
          "1/4 per unordered pair";
    }
    out.push_back(r);
  }

  {  // even-sector restriction
    CheckReport rep = bn_restriction_check(1, 1, 4, 20260816u);
    ExampleResult r{"even-sector restriction (N=1, M=1)", "", rep.pass, ""};
    if (rep.pass) {
      r.status = "exact-match";
      r.detail =
          "all six tangent-to-normal component families vanish on the locus; "
          "restricted metric and associativity verified";
    } else {
      r.status = "FAIL: restriction check";
      for (const auto& wit : rep.witnesses) r.detail += wit + "; ";
    }
    out.push_back(r);
  }

  {  // mixed pole-and-log example, numeric check with the stated metric
    auto pts = numeric_points({"t1", "t2", "t3", "k"}, "t2", 20260816u, 10);
    out.push_back(numeric_result(
        "mixed pole-and-log potential", eaw_F(), {"t1", "t2", "t3"}, pts,
        "", eaw_eta(), ""));
  }

  {  // its Legendre-type transform, metric extracted from the unity d/dT2
    auto pts = numeric_points({"T1", "T2", "T3", "k"}, "", 20260817u, 10);
    out.push_back(numeric_result(
        "Legendre-type transform of the mixed example",
        legendre_F_corrected(), {"T1", "T2", "T3"}, pts, "T2", {},
        "display has two typographic slips, repaired form verified"));
  }

  {  // k -> 0 degeneration: the k-free part is the undeformed prepotential
    Prepotential P21 = integrate_case({2, 1});
    Prepotential P20 = integrate_case({2, 0});
    Prepotential P12 = integrate_case({1, 2});
    Prepotential P10 = integrate_case({1, 0});
    ExampleResult r{"k-zero degeneration", "", false, ""};
    if (P21.F0 == P20.F_poly && P12.F0 == P10.F_poly) {
      r.status = "exact-match";
      r.pass = true;
      r.detail = "k-free parts of (2,1) and (1,2) equal the undeformed "
                 "polynomial prepotentials";
    } else {
      r.status = "FAIL: k-free part differs from the undeformed prepotential";
    }
    out.push_back(r);
  }

  return out;
}

}  // namespace wdvv
