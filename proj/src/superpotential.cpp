#include "wdvv/superpotential.hpp"

#include <stdexcept>

#include "wdvv/pseries.hpp"

namespace wdvv {

WaterBag WaterBag::make(const WaterBagSpecData& spec) {
  WaterBag w;
  w.spec_ = spec;
  if (spec.flavor == Flavor::BN) {
    if (!spec.rational.empty())
      throw std::invalid_argument("bn flavor does not take rational poles");
    w.n_ = 2 * spec.N + 1;
    w.m_ = 2 * spec.M;
  } else {
    w.n_ = spec.N;
    w.m_ = spec.M;
  }
  if (spec.flavor != Flavor::Rational && !spec.rational.empty())
    throw std::invalid_argument("rational poles require the rational flavor");
  for (const auto& rp : spec.rational)
    if (rp.L == 0) throw std::invalid_argument("rational pole order must be >= 1");
  if (w.n_ == 0 && w.m_ == 0)
    throw std::invalid_argument("empty superpotential");
  return w;
}

UPoly WaterBag::lambda_plus() const {
  std::vector<MultiPoly> c(n_ + 2);
  c[n_ + 1] = MultiPoly(Rat(1));
  for (unsigned i = 1; i <= n_; ++i) c[n_ - i] = MultiPoly::var(s_name(i));
  return UPoly(std::move(c));
}

UPoly WaterBag::lambda_plus_prime() const { return lambda_plus().derivative(); }

MultiPoly WaterBag::a_loc(unsigned i) const {
  unsigned L = spec_.rational.at(i - 1).L;
  return MultiPoly::var(x_name(i, L + 1)) / Rat(static_cast<long long>(L));
}

std::vector<MultiPoly> WaterBag::v_of_x(unsigned i) const {
  unsigned L = spec_.rational.at(i - 1).L;
  // X = x_{i,L}/L stands for v_L^{1/L}; with u_j = v_{L-j}/v_L the inverse
  // expansion of lambda^{1/L} near the pole gives x_{L+1-m} = L c_m,
  //   c_m = (X^m/m) [w^{m-1}] (1 + sum u_j w^j)^{m/L}.
  // Writing u_j = P_j / X^{2j} clears all denominators from the extraction,
  // so the P_j satisfy a polynomial recursion.
  MultiPoly xL = MultiPoly::var(x_name(i, L));
  Rat Linv = Rat(1) / Rat(static_cast<long long>(L));
  std::vector<MultiPoly> P(L);  // P[j] for u_j, j = 1..L-1; P[0] unused
  for (unsigned m = 2; m <= L; ++m) {
    // Ehat = [w^{m-1}] (1 + P_1 w + ... + P_{m-2} w^{m-2})^{m/L}
    std::vector<MultiPoly> base(m);
    base[0] = MultiPoly(Rat(1));
    for (unsigned j = 1; j + 1 < m; ++j) base[j] = P[j];
    PSeries f = PSeries::from_coeffs_low_first(std::move(base), m);
    Rat q = Rat(static_cast<long long>(m)) / Rat(static_cast<long long>(L));
    MultiPoly Ehat_rest = f.pow_rational(q).coeff(m - 1);
    // X^{m-2} in terms of x_L
    MultiPoly Xpow(Rat(1));
    for (unsigned t = 0; t + 2 < m; ++t) Xpow = Xpow * xL * Linv;
    P[m - 1] = MultiPoly::var(x_name(i, L + 1 - m)) * Xpow -
               Ehat_rest * (Rat(static_cast<long long>(L)) / Rat(static_cast<long long>(m)));
  }
  std::vector<MultiPoly> v(L + 1);  // v[l] = v_{i,l}, l = 1..L
  // v_L = X^L
  MultiPoly vL(Rat(1));
  for (unsigned t = 0; t < L; ++t) vL = vL * xL * Linv;
  v[L] = vL;
  for (unsigned j = 1; j + 1 <= L; ++j) {
    // v_{L-j} = P_j X^{L-2j}
    MultiPoly val = P[j];
    int e = static_cast<int>(L) - 2 * static_cast<int>(j);
    if (e >= 0) {
      for (int t = 0; t < e; ++t) val = val * xL * Linv;
    } else {
      for (int t = 0; t < -e; ++t)
        val = val.divide_linear_exact(x_name(i, L), MultiPoly()) *
              Rat(static_cast<long long>(L));
    }
    v[L - j] = val;
  }
  v.erase(v.begin());
  return v;
}

namespace {

UPoly prod_b(const WaterBag& w, int skip = -1) {
  UPoly r(MultiPoly(Rat(1)));
  for (unsigned j = 1; j <= w.M(); ++j)
    if (static_cast<int>(j) != skip)
      r = r * UPoly::linear(MultiPoly::var(WaterBag::b_name(j)));
  return r;
}

UPoly prod_a(const WaterBag& w, int skip = -1) {
  UPoly r(MultiPoly(Rat(1)));
  for (unsigned i = 1; i <= w.rational().size(); ++i)
    if (static_cast<int>(i) != skip)
      r = r * UPoly::linear(w.a_loc(i)).pow(w.rational()[i - 1].L + 1);
  return r;
}

}  // namespace

UPoly WaterBag::nu() const {
  UPoly B = prod_b(*this);
  UPoly A = prod_a(*this);
  UPoly out = lambda_plus_prime() * B * A;
  for (unsigned j = 1; j <= m_; ++j)
    out = out + prod_b(*this, static_cast<int>(j)) * A * MultiPoly::var(k_name(j));
  for (unsigned i = 1; i <= spec_.rational.size(); ++i) {
    unsigned L = spec_.rational[i - 1].L;
    std::vector<MultiPoly> v = v_of_x(i);
    UPoly lin = UPoly::linear(a_loc(i));
    UPoly tail;
    for (unsigned l = 1; l <= L; ++l)
      tail = tail + lin.pow(L - l) * (v[l - 1] * Rat(-static_cast<long long>(l)));
    out = out + tail * prod_a(*this, static_cast<int>(i)) * B;
  }
  return out;
}

UPoly WaterBag::inv_lambda_prime_numerator() const { return prod_b(*this) * prod_a(*this); }

FactoredValue WaterBag::nu_at_b(unsigned alpha) const {
  if (alpha == 0 || alpha > m_) throw std::out_of_range("nu_at_b: bad index");
  MultiPoly ba = MultiPoly::var(b_name(alpha));
  FactoredValue fv;
  fv.atoms[Atom{k_name(alpha), MultiPoly()}] += 1;
  MultiPoly expect = MultiPoly::var(k_name(alpha));
  for (unsigned l = 1; l <= m_; ++l) {
    if (l == alpha) continue;
    auto [c, atom] = atomize(ba - MultiPoly::var(b_name(l)));
    fv.scale *= c;
    fv.atoms[atom] += 1;
    expect = expect * (ba - MultiPoly::var(b_name(l)));
  }
  for (unsigned i = 1; i <= spec_.rational.size(); ++i) {
    unsigned e = spec_.rational[i - 1].L + 1;
    auto [c, atom] = atomize(ba - a_loc(i));
    Rat cp = 1;
    for (unsigned t = 0; t < e; ++t) cp *= c;
    fv.scale *= cp;
    fv.atoms[atom] += e;
    expect = expect * (ba - a_loc(i)).pow(e);
  }
  // the factored identity must agree with direct evaluation of nu
  MultiPoly check(fv.scale);
  for (const auto& [a, e] : fv.atoms) check = check * a.linear().pow(e);
  if (!(check == expect) || !(nu().eval(ba) == expect))
    throw std::logic_error("nu_at_b: factored value disagrees with expansion");
  return fv;
}

FactoredValue WaterBag::nu_at_a(unsigned i) const {
  if (i == 0 || i > spec_.rational.size()) throw std::out_of_range("nu_at_a: bad index");
  unsigned L = spec_.rational[i - 1].L;
  MultiPoly ai = a_loc(i);
  std::vector<MultiPoly> v = v_of_x(i);
  // nu(a_i) = -L v_{i,L} prod_j (a_i-b_j) prod_{i'!=i} (a_i-a_{i'})^{L'+1}
  FactoredValue fv;
  fv.scale = Rat(-static_cast<long long>(L));
  MultiPoly expect = v[L - 1] * fv.scale;
  {
    // v_{i,L} = (x_{i,L}/L)^L is a pure monomial
    Rat c = 1;
    for (unsigned t = 0; t < L; ++t) c /= Rat(static_cast<long long>(L));
    fv.scale *= c;
    fv.atoms[Atom{x_name(i, L), MultiPoly()}] += L;
  }
  for (unsigned j = 1; j <= m_; ++j) {
    auto [c, atom] = atomize(ai - MultiPoly::var(b_name(j)));
    fv.scale *= c;
    fv.atoms[atom] += 1;
    expect = expect * (ai - MultiPoly::var(b_name(j)));
  }
  for (unsigned ip = 1; ip <= spec_.rational.size(); ++ip) {
    if (ip == i) continue;
    unsigned e = spec_.rational[ip - 1].L + 1;
    auto [c, atom] = atomize(ai - a_loc(ip));
    Rat cp = 1;
    for (unsigned t = 0; t < e; ++t) cp *= c;
    fv.scale *= cp;
    fv.atoms[atom] += e;
    expect = expect * (ai - a_loc(ip)).pow(e);
  }
  MultiPoly check(fv.scale);
  for (const auto& [a, e] : fv.atoms) check = check * a.linear().pow(e);
  if (!(check == expect) || !(nu().eval(ai) == expect))
    throw std::logic_error("nu_at_a: factored value disagrees with expansion");
  return fv;
}

RationalFunction WaterBag::dlambda(const Coord& c) const {
  RationalFunction f;
  switch (c.kind) {
    case CoordKind::S:
      f.num = UPoly::x(n_ - c.i);
      return f;
    case CoordKind::B: {
      MultiPoly root = MultiPoly::var(b_name(c.i));
      f.num = UPoly(MultiPoly::var(k_name(c.i)) * Rat(-1));
      f.den.push_back(DenFactor{UPoly::linear(root), 1, root, {}});
      return f;
    }
    case CoordKind::X: {
      unsigned i = c.i;
      unsigned L = spec_.rational.at(i - 1).L;
      std::vector<MultiPoly> v = v_of_x(i);
      MultiPoly ai = a_loc(i);
      std::string xn = x_name(i, c.l);
      UPoly lin = UPoly::linear(ai);
      UPoly num;
      MultiPoly da = ai.derivative(xn);
      for (unsigned l = 1; l <= L; ++l) {
        num = num + lin.pow(L + 1 - l) * v[l - 1].derivative(xn);
        if (!da.is_zero())
          num = num + lin.pow(L - l) * (v[l - 1] * da * Rat(static_cast<long long>(l)));
      }
      f.num = num;
      f.den.push_back(DenFactor{UPoly::linear(ai), L + 1, ai, {}});
      return f;
    }
    case CoordKind::T:
      throw std::invalid_argument("dlambda: flat t fields are derived, not primitive");
  }
  throw std::logic_error("dlambda: bad coordinate");
}

std::vector<Coord> WaterBag::coords_raw() const {
  std::vector<Coord> out;
  for (unsigned i = 1; i <= n_; ++i)
    out.push_back(Coord{CoordKind::S, i, 0, s_name(i)});
  for (unsigned i = 1; i <= spec_.rational.size(); ++i)
    for (unsigned l = 1; l <= spec_.rational[i - 1].L + 1; ++l)
      out.push_back(Coord{CoordKind::X, i, l, x_name(i, l)});
  for (unsigned j = 1; j <= m_; ++j)
    out.push_back(Coord{CoordKind::B, j, 0, b_name(j)});
  return out;
}

std::vector<Coord> WaterBag::coords_flat() const {
  std::vector<Coord> out;
  for (unsigned i = 1; i <= n_; ++i)
    out.push_back(Coord{CoordKind::T, i, 0, t_name(i)});
  for (unsigned i = 1; i <= spec_.rational.size(); ++i)
    for (unsigned l = 1; l <= spec_.rational[i - 1].L + 1; ++l)
      out.push_back(Coord{CoordKind::X, i, l, x_name(i, l)});
  for (unsigned j = 1; j <= m_; ++j)
    out.push_back(Coord{CoordKind::B, j, 0, b_name(j)});
  return out;
}

std::map<std::string, Rat> WaterBag::grading_weights() const {
  std::map<std::string, Rat> w;
  for (unsigned i = 1; i <= n_; ++i) {
    w[s_name(i)] = Rat(static_cast<long long>(i + 1));
    w[t_name(i)] = Rat(static_cast<long long>(n_ + 2 - i));
  }
  for (unsigned j = 1; j <= m_; ++j) {
    w[b_name(j)] = 1;
    w[k_name(j)] = Rat(static_cast<long long>(n_ + 1));
  }
  return w;
}

}  // namespace wdvv
