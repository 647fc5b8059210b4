#include <stdexcept>

#include "wdvv/frobenius.hpp"
#include "wdvv/pseries.hpp"

namespace wdvv {

namespace {

PSeries mu_series(const WaterBag& w, size_t ord) {
  unsigned N = w.N();
  std::vector<MultiPoly> mu(ord);
  mu[0] = MultiPoly(Rat(static_cast<long long>(N + 1)));
  for (unsigned i = 1; i < N; ++i)
    if (i + 1 < ord)
      mu[i + 1] = MultiPoly::var(WaterBag::s_name(i)) * Rat(static_cast<long long>(N - i));
  return PSeries(std::move(mu), ord);
}

PSeries one_minus_b(const MultiPoly& b, size_t ord) {
  std::vector<MultiPoly> c(ord);
  c[0] = MultiPoly(Rat(1));
  if (ord > 1) c[1] = -b;
  return PSeries(std::move(c), ord);
}

}  // namespace

CTensor c_closed(const WaterBag& w) {
  if (w.flavor() == Flavor::Rational)
    throw std::invalid_argument("c_closed: closed forms cover the log deformation only");
  unsigned N = w.N(), M = w.M();
  CTensor c;
  c.coords = w.coords_raw();
  size_t n = c.coords.size();
  size_t ord = 2 * N + 2;
  PSeries mu = mu_series(w, ord);
  PSeries invmu = mu.reciprocal();
  PSeries invmu2 = invmu * invmu;
  // per-pole series 1/((1-b ptilde) mu) and 1/((1-b ptilde) mu^2)
  std::vector<PSeries> Sser, Rser;
  for (unsigned j = 1; j <= M; ++j) {
    PSeries gb = one_minus_b(MultiPoly::var(WaterBag::b_name(j)), ord).reciprocal();
    Sser.push_back(gb * invmu);
    Rser.push_back(gb * invmu2);
  }
  UPoly lpp = w.lambda_plus_prime();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b)
      for (size_t d = b; d < n; ++d) {
        const Coord& ca = c.coords[a];
        const Coord& cb = c.coords[b];
        const Coord& cd = c.coords[d];
        unsigned nb = (ca.kind == CoordKind::B) + (cb.kind == CoordKind::B) +
                      (cd.kind == CoordKind::B);
        PoleExpr e;
        if (nb == 0) {
          // R^0_sigma + sum_j k_j R^1_sigma(b_j); R^0 lives at p-degree
          // 2N+1-sigma, R^1 at N-sigma, each zero below degree 0
          unsigned sigma = ca.i + cb.i + cd.i;
          MultiPoly val;
          if (sigma <= 2 * N + 1) val = -invmu.coeff(2 * N + 1 - sigma);
          if (sigma <= N)
            for (unsigned j = 1; j <= M; ++j)
              val = val + Rser[j - 1].coeff(N - sigma) * MultiPoly::var(WaterBag::k_name(j));
          e = PoleExpr(val);
        } else if (nb == 1) {
          const Coord& bc = ca.kind == CoordKind::B ? ca : (cb.kind == CoordKind::B ? cb : cd);
          unsigned sigma = (ca.kind == CoordKind::S ? ca.i : 0) +
                           (cb.kind == CoordKind::S ? cb.i : 0) +
                           (cd.kind == CoordKind::S ? cd.i : 0);
          if (sigma <= N) {
            MultiPoly S = Sser[bc.i - 1].coeff(N - sigma);
            e = PoleExpr(S * MultiPoly::var(WaterBag::k_name(bc.i)));
          }
        } else if (nb == 2) {
          const Coord& sc = ca.kind == CoordKind::S ? ca : (cb.kind == CoordKind::S ? cb : cd);
          const Coord& b1 = ca.kind == CoordKind::B ? ca : cb;
          const Coord& b2 = cd.kind == CoordKind::B ? cd : cb;
          if (b1.i == b2.i) {
            MultiPoly val = MultiPoly::var(WaterBag::k_name(b1.i)) *
                            MultiPoly::var(WaterBag::b_name(b1.i)).pow(N - sc.i);
            e = PoleExpr(val);
          }
        } else {
          // three b indices
          if (ca.i == cb.i && cb.i == cd.i) {
            unsigned al = ca.i;
            MultiPoly k = MultiPoly::var(WaterBag::k_name(al));
            MultiPoly bv = MultiPoly::var(WaterBag::b_name(al));
            PoleExpr acc(lpp.eval(bv) * k);
            for (unsigned r = 1; r <= M; ++r) {
              if (r == al) continue;
              MultiPoly diff = bv - MultiPoly::var(WaterBag::b_name(r));
              auto [cc, atom] = atomize(diff);
              acc = acc + PoleExpr::pole(atom, 1,
                                         k * MultiPoly::var(WaterBag::k_name(r)) / cc);
            }
            e = acc;
          } else if (ca.i == cb.i || cb.i == cd.i || ca.i == cd.i) {
            unsigned al, be;
            if (ca.i == cb.i) { al = ca.i; be = cd.i; }
            else if (cb.i == cd.i) { al = cb.i; be = ca.i; }
            else { al = ca.i; be = cb.i; }
            // c(b_al, b_al, b_be) = k_al k_be / (b_be - b_al)
            MultiPoly diff = MultiPoly::var(WaterBag::b_name(be)) -
                             MultiPoly::var(WaterBag::b_name(al));
            auto [cc, atom] = atomize(diff);
            e = PoleExpr::pole(atom, 1,
                               MultiPoly::var(WaterBag::k_name(al)) *
                                   MultiPoly::var(WaterBag::k_name(be)) / cc);
          }
          // three distinct b's: zero
        }
        c.set(a, b, d, std::move(e));
      }
  return c;
}

CTensor c_oracle(const WaterBag& w) {
  CTensor c;
  c.coords = w.coords_raw();
  size_t n = c.coords.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b)
      for (size_t d = b; d < n; ++d)
        c.set(a, b, d, residue_pairing(w, {c.coords[a], c.coords[b], c.coords[d]}));
  return c;
}

}  // namespace wdvv
