#include "wdvv/flatchart.hpp"

#include <stdexcept>

#include "wdvv/pseries.hpp"

namespace wdvv {

FlatChart flat_map(const WaterBag& w) {
  unsigned N = w.N();
  FlatChart fc;
  fc.N = N;
  if (N == 0) return fc;
  // one guard index beyond N+2: shifting w(z)/z down by one discards the top
  // coefficient, and Hinv is read through index N+1
  size_t ord = N + 3;
  // k(p) = p (1 + s_1 w^2 + ... + s_N w^{N+1})^{1/(N+1)} with w = 1/p
  std::vector<MultiPoly> gc(ord);
  gc[0] = MultiPoly(Rat(1));
  for (unsigned i = 1; i <= N; ++i)
    if (i + 1 < ord) gc[i + 1] = MultiPoly::var(WaterBag::s_name(i));
  PSeries G = PSeries(std::move(gc), ord)
                  .pow_rational(Rat(1) / Rat(static_cast<long long>(N + 1)));
  // z = 1/k = w / G(w); revert to get w(z), then p = 1/w = k / H(z)
  PSeries z = G.reciprocal().shift_up(1);
  PSeries wz = z.revert();
  PSeries H = wz.shift_down(1);  // w(z)/z, a unit series
  PSeries Hinv = H.reciprocal();
  // p = k (1 + h_1 z + h_2 z^2 + ...) => c_n = h_{n+1}; h_1 = 0 since the
  // deformation carries no p^N term
  if (!Hinv.coeff(1).is_zero())
    throw std::logic_error("flat_map: unexpected constant term in p(k)");
  fc.t_of_s.resize(N);
  for (unsigned i = 1; i <= N; ++i) {
    const MultiPoly& c = Hinv.coeff(N + 2 - i);  // c_{N+1-i}
    fc.t_of_s[i - 1] = -(c * Rat(static_cast<long long>(N + 1)));
  }
  // invert the triangular map: t^i = s_{N+1-i} + (terms in lower s)
  fc.s_of_t.resize(N);
  for (unsigned m = 1; m <= N; ++m) {
    unsigned i = N + 1 - m;  // t^i carries s_m
    MultiPoly rest = fc.t_of_s[i - 1] - MultiPoly::var(WaterBag::s_name(m));
    std::map<std::string, MultiPoly> subst;
    for (unsigned j = 1; j < m; ++j) subst[WaterBag::s_name(j)] = fc.s_of_t[j - 1];
    fc.s_of_t[m - 1] = MultiPoly::var(WaterBag::t_name(i)) - rest.substitute(subst);
  }
  fc.ds_dt.assign(N, std::vector<MultiPoly>(N));
  for (unsigned i = 1; i <= N; ++i)
    for (unsigned j = 1; j <= N; ++j)
      fc.ds_dt[i - 1][j - 1] = fc.s_of_t[i - 1].derivative(WaterBag::t_name(j));
  return fc;
}

}  // namespace wdvv
