#pragma once

#include "wdvv/exprtree.hpp"
#include "wdvv/superpotential.hpp"

namespace wdvv {

// Simultaneous (Aberth-Ehrlich) root refinement for a dense polynomial with
// ascending complex coefficients. Deterministic: initial guesses sit on a
// fixed circle unless warm-start values are supplied. Converges to residual
// |p(z)| < tol * max|coeff|; throws std::runtime_error past the iteration cap.
std::vector<Cplx> roots_aberth(const std::vector<Cplx>& coeffs, long double tol,
                               std::vector<Cplx> init = {});

// Canonical frame at a rational parameter point: critical points xi_i of the
// superpotential, canonical values u^i = lambda(xi_i) on the principal log
// branch, second derivatives, and Lame coefficients H_i^2 = 1/lambda''(xi_i).
struct CanonicalFrame {
  std::map<std::string, Cplx> point;  // raw coordinates and parameters
  std::vector<Cplx> xi;
  std::vector<Cplx> u;
  std::vector<Cplx> lam2;  // lambda''(xi_i)
  std::vector<Cplx> H;     // principal sqrt(1/lambda'')
};

CanonicalFrame canonical_frame(const WaterBag& w,
                               const std::map<std::string, Rat>& point);

// Numeric residuals of the canonical-coordinate claims at one point: the
// pushed metric is diagonal with entries -1/lambda''(xi_i), equal to the
// u-derivatives of the Egoroff potential -s_1/(N+1); rotation coefficients
// are symmetric; the unity pushes to sum_i d/du^i; the pushed multiplication
// is diagonal with c_iii = eta_ii.
struct CanonicalReport {
  long double root_residual = 0;   // max |nu(xi_i)| over leading coefficient
  long double offdiag = 0;         // max |pushed eta_{ij}|, i != j
  long double diag_mismatch = 0;   // max |pushed eta_{ii} + 1/lambda''(xi_i)|
  long double egoroff = 0;         // max |eta_ii - d(-s1/(N+1))/du^i|
  long double beta_asym = 0;       // max |beta_ij - beta_ji|
  long double unity_push = 0;      // max |(pushed e)^i - 1|
  long double c_offdiag = 0;       // max |pushed c_{ijl}| off the diagonal
  long double c_diag = 0;          // max |pushed c_{iii} - eta_ii|
  bool pass(long double tol_exact, long double tol_fd) const {
    return root_residual < tol_exact && offdiag < tol_exact &&
           diag_mismatch < tol_exact && egoroff < tol_fd &&
           beta_asym < tol_fd && unity_push < tol_exact &&
           c_offdiag < tol_exact && c_diag < tol_exact;
  }
};

CanonicalReport canonical_check(const WaterBag& w,
                                const std::map<std::string, Rat>& point);

struct NumericReport {
  std::string check;
  std::string point;
  long double max_residual = 0;
  long double tol = 0;
  bool pass = false;
};

// WDVV associators of a closed-form prepotential evaluated in floating point:
// third derivatives are taken symbolically on the expression tree, eta comes
// from the supplied matrix or else from c(unity_var, ., .), and each point
// must keep every associator entry below tol. Points with singular eta are
// reported as skipped failures.
std::vector<NumericReport> numeric_wdvv(
    const ExprPtr& F, const std::vector<std::string>& vars,
    const std::vector<std::map<std::string, Cplx>>& points, long double tol,
    const std::string& unity_var = "",
    const std::vector<std::vector<ExprPtr>>& eta = {});

}  // namespace wdvv
