#include "wdvv/frobenius.hpp"
#include "wdvv/pseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdvv {

const PoleExpr& CTensor::at(size_t i, size_t j, size_t l) const {
  std::array<size_t, 3> key{i, j, l};
  std::sort(key.begin(), key.end());
  static const PoleExpr zero;
  auto it = entries.find(key);
  return it == entries.end() ? zero : it->second;
}

void CTensor::set(size_t i, size_t j, size_t l, PoleExpr e) {
  std::array<size_t, 3> key{i, j, l};
  std::sort(key.begin(), key.end());
  if (e.is_zero()) entries.erase(key);
  else entries[key] = std::move(e);
}

PoleExpr residue_pairing(const WaterBag& w, const std::vector<Coord>& fields) {
  // integrand: prod_f dlambda_f * prod_j (p-b_j) prod_i (p-a_i)^{L_i+1} / nu,
  // with like linear factors cancelled before any residue is taken
  UPoly num(MultiPoly(Rat(1)));
  std::map<std::string, int> net;  // site key -> net denominator exponent
  std::map<std::string, MultiPoly> site_loc;
  std::map<std::string, unsigned> site_pole;  // rational pole index, 0 for b sites
  for (unsigned j = 1; j <= w.M(); ++j) {
    std::string key = "b" + std::to_string(j);
    site_loc[key] = MultiPoly::var(WaterBag::b_name(j));
    site_pole[key] = 0;
    net[key] = -1;
  }
  for (unsigned i = 1; i <= w.rational().size(); ++i) {
    std::string key = "a" + std::to_string(i);
    site_loc[key] = w.a_loc(i);
    site_pole[key] = i;
    net[key] = -static_cast<int>(w.rational()[i - 1].L + 1);
  }
  for (const auto& f : fields) {
    RationalFunction df = w.dlambda(f);
    num = num * df.num;
    for (const auto& den : df.den) {
      bool matched = false;
      for (auto& [key, loc] : site_loc) {
        if (*den.root == loc) {
          net[key] += static_cast<int>(den.exp);
          matched = true;
          break;
        }
      }
      if (!matched) throw std::logic_error("residue_pairing: untracked pole");
    }
  }
  RationalFunction f;
  for (auto& [key, e] : net) {
    if (e < 0) num = num * UPoly::linear(site_loc[key]).pow(static_cast<unsigned>(-e));
  }
  f.num = num;
  for (auto& [key, e] : net)
    if (e > 0)
      f.den.push_back(DenFactor{UPoly::linear(site_loc[key]),
                                static_cast<unsigned>(e), site_loc[key], {}});
  DenFactor nu_factor;
  nu_factor.poly = w.nu();
  nu_factor.exp = 1;
  for (unsigned j = 1; j <= w.M(); ++j)
    nu_factor.values_at.emplace_back(MultiPoly::var(WaterBag::b_name(j)), w.nu_at_b(j));
  for (unsigned i = 1; i <= w.rational().size(); ++i)
    nu_factor.values_at.emplace_back(w.a_loc(i), w.nu_at_a(i));
  f.den.push_back(std::move(nu_factor));

  PoleExpr out(residue_at_infinity(f));
  std::vector<FactoredFrac> fracs;
  for (auto& [key, e] : net)
    if (e > 0)
      fracs.push_back(residue_at_pole_raw(f, site_loc[key], static_cast<unsigned>(e)));
  if (!fracs.empty()) out = out + reduce_fracs(fracs);
  return out;
}

namespace {

// series of 1/mu where mu = (N+1) + sum_{i<N} (N-i) s_i ptilde^{i+1}
PSeries inv_mu_series(const WaterBag& w, size_t ord) {
  unsigned N = w.N();
  std::vector<MultiPoly> mu(ord);
  mu[0] = MultiPoly(Rat(static_cast<long long>(N + 1)));
  for (unsigned i = 1; i < N; ++i)
    if (i + 1 < ord)
      mu[i + 1] = MultiPoly::var(WaterBag::s_name(i)) * Rat(static_cast<long long>(N - i));
  return PSeries(std::move(mu), ord).reciprocal();
}

PSeries geom_series(const MultiPoly& b, size_t ord) {
  // 1/(1 - b ptilde)
  std::vector<MultiPoly> c(ord);
  MultiPoly acc(Rat(1));
  for (size_t n = 0; n < ord; ++n) {
    c[n] = acc;
    acc = acc * b;
  }
  return PSeries(std::move(c), ord);
}

size_t coord_index(const std::vector<Coord>& coords, CoordKind kind, unsigned i,
                   unsigned l = 0) {
  for (size_t a = 0; a < coords.size(); ++a)
    if (coords[a].kind == kind && coords[a].i == i && coords[a].l == l) return a;
  throw std::out_of_range("coord_index: not found");
}

}  // namespace

Metric metric_closed(const WaterBag& w) {
  Metric m;
  m.coords = w.coords_raw();
  size_t n = m.coords.size();
  m.g.assign(n, std::vector<PoleExpr>(n));
  size_t ord = w.N() + 2;
  PSeries invmu = inv_mu_series(w, ord);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a; b < n; ++b) {
      const Coord& ca = m.coords[a];
      const Coord& cb = m.coords[b];
      PoleExpr e;
      if (ca.kind == CoordKind::S && cb.kind == CoordKind::S) {
        unsigned sum = ca.i + cb.i;
        if (sum <= w.N() + 1) e = PoleExpr(-invmu.coeff(w.N() + 1 - sum));
      } else if (ca.kind == CoordKind::B && cb.kind == CoordKind::B) {
        if (ca.i == cb.i) e = PoleExpr(MultiPoly::var(WaterBag::k_name(ca.i)));
      } else if (ca.kind == CoordKind::X && cb.kind == CoordKind::X) {
        if (ca.i == cb.i) {
          unsigned L = w.rational()[ca.i - 1].L;
          if (ca.l + cb.l == L + 2)
            e = PoleExpr(MultiPoly(Rat(-1) / Rat(static_cast<long long>(L))));
        }
      }
      m.g[a][b] = e;
      m.g[b][a] = m.g[a][b];
    }
  }
  return m;
}

Metric metric_closed_flat(const WaterBag& w) {
  Metric m;
  m.coords = w.coords_flat();
  size_t n = m.coords.size();
  m.g.assign(n, std::vector<PoleExpr>(n));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a; b < n; ++b) {
      const Coord& ca = m.coords[a];
      const Coord& cb = m.coords[b];
      PoleExpr e;
      if (ca.kind == CoordKind::T && cb.kind == CoordKind::T) {
        if (ca.i + cb.i == w.N() + 1)
          e = PoleExpr(MultiPoly(Rat(-1) / Rat(static_cast<long long>(w.N() + 1))));
      } else if (ca.kind == CoordKind::B && cb.kind == CoordKind::B) {
        if (ca.i == cb.i) e = PoleExpr(MultiPoly::var(WaterBag::k_name(ca.i)));
      } else if (ca.kind == CoordKind::X && cb.kind == CoordKind::X) {
        if (ca.i == cb.i) {
          unsigned L = w.rational()[ca.i - 1].L;
          if (ca.l + cb.l == L + 2)
            e = PoleExpr(MultiPoly(Rat(-1) / Rat(static_cast<long long>(L))));
        }
      }
      m.g[a][b] = e;
      m.g[b][a] = m.g[a][b];
    }
  }
  return m;
}

Metric metric_oracle(const WaterBag& w) {
  Metric m;
  m.coords = w.coords_raw();
  size_t n = m.coords.size();
  m.g.assign(n, std::vector<PoleExpr>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      m.g[a][b] = residue_pairing(w, {m.coords[a], m.coords[b]});
      m.g[b][a] = m.g[a][b];
    }
  return m;
}

InverseMetric metric_flat_inverse(const WaterBag& w) {
  InverseMetric im;
  im.coords = w.coords_flat();
  size_t n = im.coords.size();
  im.ginv.assign(n, std::vector<PoleExpr>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      const Coord& ca = im.coords[a];
      const Coord& cb = im.coords[b];
      PoleExpr e;
      if (ca.kind == CoordKind::T && cb.kind == CoordKind::T) {
        if (ca.i + cb.i == w.N() + 1)
          e = PoleExpr(MultiPoly(Rat(-static_cast<long long>(w.N() + 1))));
      } else if (ca.kind == CoordKind::B && cb.kind == CoordKind::B) {
        if (ca.i == cb.i)
          e = PoleExpr::pole(Atom{WaterBag::k_name(ca.i), MultiPoly()}, 1,
                             MultiPoly(Rat(1)));
      } else if (ca.kind == CoordKind::X && cb.kind == CoordKind::X) {
        if (ca.i == cb.i) {
          unsigned L = w.rational()[ca.i - 1].L;
          if (ca.l + cb.l == L + 2)
            e = PoleExpr(MultiPoly(Rat(-static_cast<long long>(L))));
        }
      }
      im.ginv[a][b] = e;
      im.ginv[b][a] = im.ginv[a][b];
    }
  return im;
}

Metric push_to_flat(const Metric& m, const WaterBag& w, const FlatChart& fc) {
  // only s rows move: s_i = s_i(t); x and b stay put
  Metric out;
  out.coords = w.coords_flat();
  size_t n = out.coords.size();
  if (m.g.size() != n) throw std::invalid_argument("push_to_flat: size mismatch");
  std::map<std::string, MultiPoly> subst;
  for (unsigned i = 1; i <= w.N(); ++i)
    subst[WaterBag::s_name(i)] = fc.s_of_t[i - 1];
  auto jac = [&](size_t raw, size_t flat) -> MultiPoly {
    const Coord& cr = m.coords[raw];
    const Coord& cf = out.coords[flat];
    if (cr.kind == CoordKind::S && cf.kind == CoordKind::T)
      return fc.ds_dt[cr.i - 1][cf.i - 1];
    if (cr.kind == cf.kind && cr.i == cf.i && cr.l == cf.l) return MultiPoly(Rat(1));
    return MultiPoly();
  };
  out.g.assign(n, std::vector<PoleExpr>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      PoleExpr acc;
      for (size_t i = 0; i < n; ++i) {
        MultiPoly Ji = jac(i, a);
        if (Ji.is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
          MultiPoly Jj = jac(j, b);
          if (Jj.is_zero()) continue;
          PoleExpr e = m.g[i][j];
          if (e.is_zero()) continue;
          for (unsigned si = 1; si <= w.N(); ++si)
            e = e.substitute(WaterBag::s_name(si), subst[WaterBag::s_name(si)]);
          acc = acc + e * (Ji * Jj);
        }
      }
      out.g[a][b] = acc;
      out.g[b][a] = acc;
    }
  return out;
}

CTensor push_to_flat(const CTensor& c, const WaterBag& w, const FlatChart& fc) {
  CTensor out;
  out.coords = w.coords_flat();
  size_t n = out.coords.size();
  std::map<std::string, MultiPoly> subst;
  for (unsigned i = 1; i <= w.N(); ++i)
    subst[WaterBag::s_name(i)] = fc.s_of_t[i - 1];
  // substitute s(t) once per raw entry
  std::map<std::array<size_t, 3>, PoleExpr> raw_t;
  for (const auto& [key, e] : c.entries) {
    PoleExpr et = e;
    for (unsigned si = 1; si <= w.N(); ++si)
      et = et.substitute(WaterBag::s_name(si), subst[WaterBag::s_name(si)]);
    raw_t[key] = et;
  }
  auto jac = [&](size_t raw, size_t flat) -> MultiPoly {
    const Coord& cr = c.coords[raw];
    const Coord& cf = out.coords[flat];
    if (cr.kind == CoordKind::S && cf.kind == CoordKind::T)
      return fc.ds_dt[cr.i - 1][cf.i - 1];
    if (cr.kind == cf.kind && cr.i == cf.i && cr.l == cf.l) return MultiPoly(Rat(1));
    return MultiPoly();
  };
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b)
      for (size_t d = b; d < n; ++d) {
        PoleExpr acc;
        for (const auto& [key, e] : raw_t) {
          // sum the Jacobian contraction over all index orderings of the
          // symmetric raw entry
          std::array<size_t, 3> k = key;
          std::sort(k.begin(), k.end());
          std::vector<std::array<size_t, 3>> perms;
          do perms.push_back(k); while (std::next_permutation(k.begin(), k.end()));
          for (const auto& pm : perms) {
            MultiPoly J = jac(pm[0], a) * jac(pm[1], b) * jac(pm[2], d);
            if (J.is_zero()) continue;
            acc = acc + e * J;
          }
        }
        out.set(a, b, d, acc);
      }
  return out;
}

}  // namespace wdvv
