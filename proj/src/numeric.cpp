#include "wdvv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "wdvv/frobenius.hpp"

namespace wdvv {

namespace {

using CVec = std::vector<Cplx>;  // ascending polynomial coefficients
using CMat = std::vector<std::vector<Cplx>>;

Cplx cv_eval(const CVec& c, const Cplx& z) {
  Cplx v(0);
  for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
  return v;
}

CVec cv_deriv(const CVec& c) {
  CVec d;
  for (size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i] * Cplx(static_cast<long double>(i)));
  if (d.empty()) d.push_back(Cplx(0));
  return d;
}

CVec cv_mul(const CVec& a, const CVec& b) {
  CVec c(a.size() + b.size() - 1, Cplx(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::string cplx_str(const Cplx& v) {
  char buf[96];
  if (v.imag() == 0.0L)
    std::snprintf(buf, sizeof buf, "%.6Lg", v.real());
  else
    std::snprintf(buf, sizeof buf, "%.6Lg%+.6Lgi", v.real(), v.imag());
  return buf;
}

std::string point_str(const std::map<std::string, Cplx>& pt) {
  std::string s;
  for (const auto& [k, v] : pt) {
    if (!s.empty()) s += ", ";
    s += k + " = " + cplx_str(v);
  }
  return s;
}

// Gauss-Jordan inverse with partial pivoting; throws on a numerically
// singular matrix
CMat c_inverse(CMat A) {
  size_t n = A.size();
  long double scale = 0;
  for (const auto& row : A)
    for (const Cplx& v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0) throw std::domain_error("c_inverse: zero matrix");
  CMat I(n, std::vector<Cplx>(n, Cplx(0)));
  for (size_t i = 0; i < n; ++i) I[i][i] = Cplx(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    if (std::abs(A[piv][col]) < 1e-14L * scale)
      throw std::domain_error("c_inverse: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(I[piv], I[col]);
    Cplx d = A[col][col];
    for (size_t j = 0; j < n; ++j) {
      A[col][j] /= d;
      I[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Cplx f = A[r][col];
      if (f == Cplx(0)) continue;
      for (size_t j = 0; j < n; ++j) {
        A[r][j] -= f * A[col][j];
        I[r][j] -= f * I[col][j];
      }
    }
  }
  return I;
}

CMat c_mul(const CMat& A, const CMat& B) {
  size_t n = A.size();
  CMat C(n, std::vector<Cplx>(n, Cplx(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (A[i][k] == Cplx(0)) continue;
      for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

// superpotential data at a complex parameter assignment, log flavor only
struct LamData {
  unsigned N = 0, M = 0;
  CVec lamplus;        // degree N+1, ascending
  std::vector<Cplx> b;
  std::vector<Cplx> k;

  Cplx lam2(const Cplx& p) const {
    Cplx v = cv_eval(cv_deriv(cv_deriv(lamplus)), p);
    for (unsigned j = 0; j < M; ++j) v -= k[j] / ((p - b[j]) * (p - b[j]));
    return v;
  }
  // nu = lamplus' prod(p-b) + sum_j k_j prod_{r != j}(p-b_r)
  CVec nu() const {
    CVec n = cv_deriv(lamplus);
    for (unsigned j = 0; j < M; ++j) n = cv_mul(n, CVec{-b[j], Cplx(1)});
    for (unsigned j = 0; j < M; ++j) {
      CVec t{k[j]};
      for (unsigned r = 0; r < M; ++r)
        if (r != j) t = cv_mul(t, CVec{-b[r], Cplx(1)});
      for (size_t i = 0; i < t.size(); ++i) n[i] += t[i];
    }
    return n;
  }
};

// x packs the raw chart: s_1..s_N then b_1..b_M; parameters ride separately
LamData lam_data(unsigned N, unsigned M, const std::vector<Cplx>& x,
                 const std::vector<Cplx>& k) {
  LamData L;
  L.N = N;
  L.M = M;
  L.lamplus.assign(N + 2, Cplx(0));
  L.lamplus[N + 1] = Cplx(1);
  for (unsigned g = 1; g <= N; ++g) L.lamplus[N - g] = x[g - 1];
  for (unsigned j = 0; j < M; ++j) L.b.push_back(x[N + j]);
  L.k = k;
  return L;
}

// principal log nudged onto the branch sheet of a reference value; keeps
// logarithms continuous along a continuation path
Cplx log_near(const Cplx& z, const Cplx* ref) {
  Cplx v = std::log(z);
  if (ref) {
    long double two_pi = 2 * std::numbers::pi_v<long double>;
    long double shift = std::floor((ref->imag() - v.imag()) / two_pi + 0.5L);
    v += Cplx(0, two_pi * shift);
  }
  return v;
}

struct FrameAt {
  std::vector<Cplx> xi, u, l2;
  CMat J;   // J[i][alpha] = d u^i / d x_alpha
  CMat lg;  // lg[i][j] = branch of log(xi_i - b_j) used in u^i
  long double nu_residual = 0;
};

FrameAt frame_at(const LamData& L, std::vector<Cplx> warm,
                 const CMat* log_ref = nullptr) {
  FrameAt F;
  CVec nu = L.nu();
  F.xi = roots_aberth(nu, 1e-16L, std::move(warm));
  long double scale = 0;
  for (const Cplx& c : nu) scale = std::max(scale, std::abs(c));
  size_t n = F.xi.size();
  F.J.assign(n, std::vector<Cplx>(L.N + L.M, Cplx(0)));
  F.lg.assign(n, std::vector<Cplx>(L.M, Cplx(0)));
  for (size_t i = 0; i < n; ++i) {
    const Cplx& xi = F.xi[i];
    F.nu_residual = std::max(F.nu_residual, std::abs(cv_eval(nu, xi)) / scale);
    Cplx u = cv_eval(L.lamplus, xi);
    for (unsigned j = 0; j < L.M; ++j) {
      Cplx lg = log_near(xi - L.b[j], log_ref ? &(*log_ref)[i][j] : nullptr);
      F.lg[i][j] = lg;
      u += L.k[j] * lg;
    }
    F.u.push_back(u);
    F.l2.push_back(L.lam2(xi));
    for (unsigned g = 1; g <= L.N; ++g) {
      Cplx v(1);
      for (unsigned e = 0; e < L.N - g; ++e) v *= xi;
      F.J[i][g - 1] = v;  // d lambda / d s_g = p^{N-g}
    }
    for (unsigned j = 0; j < L.M; ++j)
      F.J[i][L.N + j] = -L.k[j] / (xi - L.b[j]);
  }
  return F;
}

// continuation x(u): Newton iteration with root tracking from the base frame
std::pair<std::vector<Cplx>, FrameAt> solve_x_of_u(
    unsigned N, unsigned M, const std::vector<Cplx>& k, std::vector<Cplx> x,
    std::vector<Cplx> xi_warm, const CMat& log_ref,
    const std::vector<Cplx>& u_target) {
  long double uscale = 1;
  for (const Cplx& u : u_target) uscale = std::max(uscale, std::abs(u));
  for (int it = 0; it < 80; ++it) {
    LamData L = lam_data(N, M, x, k);
    FrameAt F = frame_at(L, xi_warm, &log_ref);
    xi_warm = F.xi;
    long double err = 0;
    size_t n = u_target.size();
    std::vector<Cplx> rhs(n);
    for (size_t i = 0; i < n; ++i) {
      rhs[i] = F.u[i] - u_target[i];
      err = std::max(err, std::abs(rhs[i]));
    }
    if (err < 1e-16L * uscale) return {x, F};
    CMat Jinv = c_inverse(F.J);
    for (size_t a = 0; a < n; ++a) {
      Cplx d(0);
      for (size_t i = 0; i < n; ++i) d += Jinv[a][i] * rhs[i];
      x[a] -= d;
    }
  }
  throw std::runtime_error("canonical continuation did not converge");
}

}  // namespace

std::vector<Cplx> roots_aberth(const std::vector<Cplx>& coeffs_in,
                               long double tol, std::vector<Cplx> init) {
  CVec c = coeffs_in;
  while (c.size() > 1 && std::abs(c.back()) == 0) c.pop_back();
  if (c.size() <= 1)
    throw std::invalid_argument("roots_aberth: degree must be at least one");
  size_t n = c.size() - 1;
  long double scale = 0;
  for (const Cplx& v : c) scale = std::max(scale, std::abs(v));
  CVec d = cv_deriv(c);

  std::vector<Cplx> z;
  if (init.size() == n) {
    z = std::move(init);
  } else {
    long double R = 0;
    for (size_t i = 0; i < n; ++i)
      R = std::max(R, std::abs(c[i] / c[n]));
    R = 1 + R;
    for (size_t j = 0; j < n; ++j) {
      long double a = 2 * std::numbers::pi_v<long double> *
                          static_cast<long double>(j) /
                          static_cast<long double>(n) +
                      0.7L;
      long double r = R * (1 + 0.05L * static_cast<long double>(j % 3));
      z.push_back(Cplx(r * std::cos(a), r * std::sin(a)));
    }
  }

  for (int it = 0; it < 1000; ++it) {
    long double worst = 0;
    long double moved = 0;
    for (size_t i = 0; i < n; ++i) {
      Cplx p = cv_eval(c, z[i]);
      worst = std::max(worst, std::abs(p));
      Cplx dp = cv_eval(d, z[i]);
      if (dp == Cplx(0)) {
        z[i] += Cplx(1e-8L, 1e-8L);
        moved = 1;
        continue;
      }
      Cplx w = p / dp;
      Cplx s(0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) s += Cplx(1) / (z[i] - z[j]);
      Cplx corr = w / (Cplx(1) - w * s);
      z[i] -= corr;
      moved = std::max(moved, std::abs(corr));
    }
    if (worst < tol * scale && moved < 1e-15L * (1 + std::abs(z[0]))) return z;
    if (worst < tol * scale && it > 2) return z;
  }
  throw std::runtime_error("roots_aberth: no convergence within the cap");
}

CanonicalFrame canonical_frame(const WaterBag& w,
                               const std::map<std::string, Rat>& point) {
  if (w.flavor() == Flavor::Rational)
    throw std::invalid_argument(
        "canonical_frame: covers the logarithmic deformation only");
  unsigned N = w.N(), M = w.M();
  std::vector<Cplx> x, k;
  for (unsigned g = 1; g <= N; ++g)
    x.push_back(Cplx(rat_to_ld(point.at(WaterBag::s_name(g)))));
  for (unsigned j = 1; j <= M; ++j)
    x.push_back(Cplx(rat_to_ld(point.at(WaterBag::b_name(j)))));
  for (unsigned j = 1; j <= M; ++j)
    k.push_back(Cplx(rat_to_ld(point.at(WaterBag::k_name(j)))));
  LamData L = lam_data(N, M, x, k);
  FrameAt F = frame_at(L, {});
  CanonicalFrame out;
  for (const auto& [name, v] : point) out.point[name] = Cplx(rat_to_ld(v));
  out.xi = F.xi;
  out.u = F.u;
  out.lam2 = F.l2;
  for (const Cplx& l2 : F.l2) out.H.push_back(std::sqrt(Cplx(1) / l2));
  return out;
}

CanonicalReport canonical_check(const WaterBag& w,
                                const std::map<std::string, Rat>& point) {
  if (w.flavor() == Flavor::Rational)
    throw std::invalid_argument(
        "canonical_check: covers the logarithmic deformation only");
  unsigned N = w.N(), M = w.M();
  size_t n = N + M;
  std::vector<Cplx> x0, kv;
  for (unsigned g = 1; g <= N; ++g)
    x0.push_back(Cplx(rat_to_ld(point.at(WaterBag::s_name(g)))));
  for (unsigned j = 1; j <= M; ++j)
    x0.push_back(Cplx(rat_to_ld(point.at(WaterBag::b_name(j)))));
  for (unsigned j = 1; j <= M; ++j)
    kv.push_back(Cplx(rat_to_ld(point.at(WaterBag::k_name(j)))));
  LamData L0 = lam_data(N, M, x0, kv);
  FrameAt F0 = frame_at(L0, {});

  // semisimplicity diagnostic
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(F0.xi[i] - F0.xi[j]) < 1e-6L)
        throw std::domain_error(
            "canonical_check: near-collision of critical points, "
            "conditioning too poor at this point");

  CanonicalReport rep;
  rep.root_residual = F0.nu_residual;

  // exact raw tensors at the rational point
  Metric eta_raw = metric_closed(w);
  CTensor c_raw = c_closed(w);
  CMat eta(n, std::vector<Cplx>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      eta[a][b] = Cplx(rat_to_ld(eta_raw.at(a, b).eval(point)));
  std::vector<CMat> c3(n, CMat(n, std::vector<Cplx>(n)));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t g = 0; g < n; ++g)
        c3[a][b][g] = Cplx(rat_to_ld(c_raw.at(a, b, g).eval(point)));

  CMat Ainv = c_inverse(F0.J);  // Ainv[alpha][i] = d x_alpha / d u^i

  CMat etac(n, std::vector<Cplx>(n, Cplx(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Cplx v(0);
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
          v += Ainv[a][i] * Ainv[b][j] * eta[a][b];
      etac[i][j] = v;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      rep.offdiag = std::max(rep.offdiag, std::abs(etac[i][j]));
    }
  for (size_t i = 0; i < n; ++i)
    rep.diag_mismatch = std::max(
        rep.diag_mismatch, std::abs(etac[i][i] + Cplx(1) / F0.l2[i]));

  // unity d/ds_N pushes to the vector with all components one
  for (size_t i = 0; i < n; ++i)
    rep.unity_push =
        std::max(rep.unity_push, std::abs(F0.J[i][N - 1] - Cplx(1)));

  // pushed multiplication: diagonal with c_iii = eta_ii
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < n; ++l) {
        Cplx v(0);
        for (size_t a = 0; a < n; ++a)
          for (size_t b = 0; b < n; ++b)
            for (size_t g = 0; g < n; ++g)
              v += Ainv[a][i] * Ainv[b][j] * Ainv[g][l] * c3[a][b][g];
        if (i == j && j == l)
          rep.c_diag = std::max(rep.c_diag, std::abs(v - etac[i][i]));
        else
          rep.c_offdiag = std::max(rep.c_offdiag, std::abs(v));
      }

  // finite-difference checks: Egoroff potential and rotation coefficients
  const long double h = 1e-6L;
  std::vector<Cplx> H0;
  for (const Cplx& l2 : F0.l2) H0.push_back(std::sqrt(Cplx(1) / l2));
  // square root on the sheet of the base value, for continuity under the
  // small perturbations below
  auto sqrt_near = [](const Cplx& z, const Cplx& ref) {
    Cplx v = std::sqrt(z);
    return std::abs(v - ref) <= std::abs(-v - ref) ? v : -v;
  };
  CMat dH(n, std::vector<Cplx>(n));  // dH[i][j] = d H_j / d u^i
  for (size_t i = 0; i < n; ++i) {
    std::vector<Cplx> up = F0.u, um = F0.u;
    up[i] += h;
    um[i] -= h;
    auto [xp, Fp] = solve_x_of_u(N, M, kv, x0, F0.xi, F0.lg, up);
    auto [xm, Fm] = solve_x_of_u(N, M, kv, x0, F0.xi, F0.lg, um);
    if (N >= 1) {
      Cplx ds1 = (xp[0] - xm[0]) / (2 * h);
      Cplx want = -ds1 / Cplx(static_cast<long double>(N + 1));
      rep.egoroff = std::max(rep.egoroff, std::abs(etac[i][i] - want));
    }
    for (size_t j = 0; j < n; ++j) {
      Cplx Hp = sqrt_near(Cplx(1) / Fp.l2[j], H0[j]);
      Cplx Hm = sqrt_near(Cplx(1) / Fm.l2[j], H0[j]);
      dH[i][j] = (Hp - Hm) / (2 * h);
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Cplx bij = dH[i][j] / H0[i];
      Cplx bji = dH[j][i] / H0[j];
      rep.beta_asym = std::max(rep.beta_asym, std::abs(bij - bji));
    }
  return rep;
}

std::vector<NumericReport> numeric_wdvv(
    const ExprPtr& F, const std::vector<std::string>& vars,
    const std::vector<std::map<std::string, Cplx>>& points, long double tol,
    const std::string& unity_var, const std::vector<std::vector<ExprPtr>>& eta) {
  size_t n = vars.size();
  size_t epos = n;
  if (eta.empty()) {
    for (size_t i = 0; i < n; ++i)
      if (vars[i] == unity_var) epos = i;
    if (epos == n)
      throw std::invalid_argument(
          "numeric_wdvv: need eta or a unity variable to extract it");
  }
  std::map<std::array<size_t, 3>, ExprPtr> d3;
  for (size_t a = 0; a < n; ++a) {
    ExprPtr da = F->derivative(vars[a]);
    for (size_t b = a; b < n; ++b) {
      ExprPtr dab = da->derivative(vars[b]);
      for (size_t c = b; c < n; ++c)
        d3[{a, b, c}] = dab->derivative(vars[c]);
    }
  }
  std::vector<NumericReport> out;
  for (const auto& pt : points) {
    NumericReport rep{"numeric wdvv", point_str(pt), 0, tol, false};
    std::vector<CMat> C(n, CMat(n, std::vector<Cplx>(n, Cplx(0))));
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a; b < n; ++b)
        for (size_t c = b; c < n; ++c) {
          Cplx v = d3.at({a, b, c})->eval(pt);
          C[a][b][c] = C[a][c][b] = C[b][a][c] = v;
          C[b][c][a] = C[c][a][b] = C[c][b][a] = v;
        }
    CMat H(n, std::vector<Cplx>(n));
    if (eta.empty()) {
      H = C[epos];
    } else {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) H[i][j] = eta[i][j]->eval(pt);
    }
    CMat Hinv;
    try {
      Hinv = c_inverse(H);
    } catch (const std::domain_error&) {
      rep.point += " (singular eta, point skipped)";
      out.push_back(rep);
      continue;
    }
    long double worst = 0;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b) {
        CMat L = c_mul(c_mul(C[a], Hinv), C[b]);
        CMat R = c_mul(c_mul(C[b], Hinv), C[a]);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j)
            worst = std::max(worst, std::abs(L[i][j] - R[i][j]));
      }
    rep.max_residual = worst;
    rep.pass = worst < tol;
    out.push_back(rep);
  }
  return out;
}

}  // namespace wdvv
