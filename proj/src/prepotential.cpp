#include "wdvv/prepotential.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdvv {

namespace {

// position of the b coordinate with pole index i, or npos
size_t b_position(const std::vector<Coord>& coords, unsigned i) {
  for (size_t p = 0; p < coords.size(); ++p)
    if (coords[p].kind == CoordKind::B && coords[p].i == i) return p;
  return static_cast<size_t>(-1);
}

struct LogPattern {
  // gamma determinations per unordered pair {i<j}, cross-checked
  std::map<std::pair<unsigned, unsigned>, MultiPoly> gamma;

  void record(unsigned i, unsigned j, MultiPoly val) {
    auto key = std::make_pair(i, j);
    auto it = gamma.find(key);
    if (it == gamma.end())
      gamma.emplace(key, std::move(val));
    else if (!(it->second == val))
      throw std::domain_error(
          "integrate_F: inconsistent log coefficient for pair b" +
          std::to_string(i) + ", b" + std::to_string(j));
  }
};

// third derivatives of gamma (b_i-b_j)^2 log(b_i-b_j)^2 land on four entry
// patterns with numerators +-4 gamma over (b_i - b_j)
void classify_pole(const std::array<size_t, 3>& key,
                   const std::vector<Coord>& coords, const Atom& a,
                   const MultiPoly& num, LogPattern& pat) {
  unsigned i = 0, j = 0;
  for (const auto& c : coords)
    if (c.kind == CoordKind::B && c.name == a.var) i = c.i;
  if (i == 0)
    throw std::domain_error("integrate_F: pole atom is not a log position");
  bool found = false;
  for (const auto& c : coords)
    if (c.kind == CoordKind::B && a.shift == MultiPoly::var(c.name)) {
      j = c.i;
      found = true;
    }
  if (!found || j <= i)
    throw std::domain_error(
        "integrate_F: pole atom is not a difference of log positions");
  size_t pi = b_position(coords, i), pj = b_position(coords, j);
  std::array<size_t, 3> iii{pi, pi, pi}, jjj{pj, pj, pj}, iij{}, ijj{};
  iij = {pi, pi, pj};
  ijj = {pi, pj, pj};
  std::sort(iij.begin(), iij.end());
  std::sort(ijj.begin(), ijj.end());
  if (key == iii)
    pat.record(i, j, num / Rat(4));
  else if (key == jjj)
    pat.record(i, j, -(num / Rat(4)));
  else if (key == iij)
    pat.record(i, j, -(num / Rat(4)));
  else if (key == ijj)
    pat.record(i, j, num / Rat(4));
  else
    throw std::domain_error(
        "integrate_F: pole term outside the log-block derivative pattern");
}

}  // namespace

Prepotential integrate_F(const WaterBag& w, const CTensor& c) {
  Prepotential P;
  P.coords = c.coords;
  size_t n = c.coords.size();

  // pole terms must realize the log-block pattern with one consistent
  // coefficient per pair
  LogPattern pat;
  for (const auto& [key, e] : c.entries)
    for (const auto& [pk, num] : e.pole_terms()) {
      if (pk.second != 1)
        throw std::domain_error("integrate_F: pole of order above one");
      classify_pole(key, c.coords, pk.first, num, pat);
    }
  P.gamma = pat.gamma;

  // integrate the polynomial part by monomial matching: each entry monomial
  // determines the F-coefficient of its antiderivative monomial, and repeated
  // determinations must agree (closedness of the tensor)
  std::map<std::map<std::string, unsigned>, Rat> fcoef;
  for (size_t ia = 0; ia < n; ++ia)
    for (size_t ib = ia; ib < n; ++ib)
      for (size_t ic = ib; ic < n; ++ic) {
        const PoleExpr& e = c.at(ia, ib, ic);
        const MultiPoly poly = e.poly();
        if (poly.is_zero()) continue;
        const auto& vars = poly.vars();
        const std::string &na = c.coords[ia].name, &nb = c.coords[ib].name,
                          &nc = c.coords[ic].name;
        for (const auto& [exp, coeff] : poly.terms()) {
          std::map<std::string, unsigned> D;
          for (size_t v = 0; v < vars.size(); ++v)
            if (v < exp.size() && exp[v]) D[vars[v]] = exp[v];
          D[na] += 1;
          D[nb] += 1;
          D[nc] += 1;
          Rat mult = Rat(D[na]) * Rat(D[nb] - (ib == ia ? 1 : 0)) *
                     Rat(D[nc] - (ic == ia ? 1 : 0) - (ic == ib ? 1 : 0));
          Rat f = coeff / mult;
          auto it = fcoef.find(D);
          if (it == fcoef.end())
            fcoef.emplace(std::move(D), f);
          else if (it->second != f)
            throw std::domain_error(
                "integrate_F: integrability failure at a monomial of entry " +
                na + "," + nb + "," + nc);
        }
      }
  MultiPoly F;
  for (const auto& [D, f] : fcoef) {
    MultiPoly mono(f);
    for (const auto& [name, e] : D) mono = mono * MultiPoly::var(name, e);
    F = F + mono;
  }
  P.F_poly = F;

  // split off the deformation-parameter structure: constant and single-k
  // cofactors only
  std::vector<std::string> knames;
  for (unsigned r = 1; r <= w.M(); ++r) knames.push_back(WaterBag::k_name(r));
  auto parts = F.split_by(knames);
  for (const auto& [ke, part] : parts) {
    unsigned total = 0, which = 0;
    for (size_t r = 0; r < ke.size(); ++r) {
      total += ke[r];
      if (ke[r]) which = static_cast<unsigned>(r + 1);
    }
    if (total == 0)
      P.F0 = part;
    else if (total == 1)
      P.F1[which] = part;
    else
      throw std::domain_error(
          "integrate_F: polynomial part is not linear in the parameters");
  }

  std::string bad = third_derivative_mismatch(P, c);
  if (!bad.empty())
    throw std::domain_error("integrate_F: reconstruction mismatch at " + bad);
  return P;
}

std::string third_derivative_mismatch(const Prepotential& P,
                                      const CTensor& c) {
  size_t n = c.coords.size();
  // log-block third derivatives, grouped per entry
  std::map<std::array<size_t, 3>, PoleExpr> logpart;
  for (const auto& [pair, g] : P.gamma) {
    size_t pi = b_position(c.coords, pair.first),
           pj = b_position(c.coords, pair.second);
    Atom a{c.coords[pi].name, MultiPoly::var(c.coords[pj].name)};
    std::array<size_t, 3> iii{pi, pi, pi}, jjj{pj, pj, pj},
        iij{pi, pi, pj}, ijj{pi, pj, pj};
    std::sort(iij.begin(), iij.end());
    std::sort(ijj.begin(), ijj.end());
    MultiPoly four = g * Rat(4);
    logpart[iii] = logpart[iii] + PoleExpr::pole(a, 1, four);
    logpart[jjj] = logpart[jjj] - PoleExpr::pole(a, 1, four);
    logpart[iij] = logpart[iij] - PoleExpr::pole(a, 1, four);
    logpart[ijj] = logpart[ijj] + PoleExpr::pole(a, 1, four);
  }
  for (size_t ia = 0; ia < n; ++ia)
    for (size_t ib = ia; ib < n; ++ib)
      for (size_t ic = ib; ic < n; ++ic) {
        MultiPoly d3 = P.F_poly.derivative(c.coords[ia].name)
                           .derivative(c.coords[ib].name)
                           .derivative(c.coords[ic].name);
        PoleExpr expect(d3);
        auto it = logpart.find({ia, ib, ic});
        if (it != logpart.end()) expect = expect + it->second;
        if (!(expect == c.at(ia, ib, ic)))
          return c.coords[ia].name + "," + c.coords[ib].name + "," +
                 c.coords[ic].name;
      }
  return {};
}

}  // namespace wdvv
