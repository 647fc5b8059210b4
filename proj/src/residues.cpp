#include "wdvv/residues.hpp"

#include <stdexcept>

#include "wdvv/pseries.hpp"

namespace wdvv {

UPoly RationalFunction::den_expanded() const {
  UPoly d(MultiPoly(Rat(1)));
  for (const auto& f : den) d = d * f.poly.pow(f.exp);
  return d;
}

MultiPoly residue_at_infinity(const RationalFunction& f) {
  if (f.num.is_zero()) return MultiPoly();
  UPoly D = f.den_expanded();
  if (D.is_zero()) throw std::domain_error("residue_at_infinity: zero denominator");
  int dN = f.num.degree();
  int dD = D.degree();
  int j = dN - dD + 1;  // index of the 1/p coefficient in the expansion
  if (j < 0) return MultiPoly();
  if (!D.lead().is_constant() || D.lead().constant_value() == 0)
    throw std::domain_error(
        "residue_at_infinity: denominator leading coefficient is not rational");
  size_t ord = static_cast<size_t>(j) + 1;
  PSeries Nrev = PSeries::from_coeffs_low_first(f.num.reversed(), ord);
  PSeries Drev = PSeries::from_coeffs_low_first(D.reversed(), ord);
  PSeries S = Nrev * Drev.reciprocal();
  return -S.coeff(static_cast<size_t>(j));
}

namespace {

// accumulates poly(point)^power in factored form
void factored_value_at(const DenFactor& f, const MultiPoly& point, unsigned power,
                       Rat& scale, std::map<Atom, unsigned>& atoms) {
  if (power == 0) return;
  MultiPoly value;
  if (f.root) {
    value = point - *f.root;
  } else {
    for (const auto& [pt, fv] : f.values_at) {
      if (pt == point) {
        Rat s = fv.scale;
        if (s == 0) throw std::domain_error("factored value model with zero scale");
        Rat sp = 1;
        for (unsigned i = 0; i < power; ++i) sp *= s;
        scale *= sp;
        for (const auto& [a, e] : fv.atoms) atoms[a] += e * power;
        return;
      }
    }
    value = f.poly.eval(point);
  }
  if (value.is_zero())
    throw std::domain_error("denominator factor vanishes at the residue point");
  if (value.is_constant()) {
    Rat c = value.constant_value();
    for (unsigned i = 0; i < power; ++i) scale *= c;
    return;
  }
  auto [c, atom] = atomize(value);
  Rat cp = 1;
  for (unsigned i = 0; i < power; ++i) cp *= c;
  scale *= cp;
  atoms[atom] += power;
}

}  // namespace

FactoredFrac residue_at_pole_raw(const RationalFunction& f, const MultiPoly& point,
                                 unsigned multiplicity) {
  if (multiplicity == 0)
    throw std::invalid_argument("residue_at_pole: multiplicity must be positive");
  int found = -1;
  for (size_t i = 0; i < f.den.size(); ++i) {
    if (f.den[i].root && *f.den[i].root == point) {
      if (found >= 0)
        throw std::invalid_argument("residue_at_pole: duplicate factor at the point");
      found = static_cast<int>(i);
    }
  }
  if (found < 0)
    throw std::invalid_argument("residue_at_pole: no tracked pole at the point");
  if (f.den[static_cast<size_t>(found)].exp != multiplicity)
    throw std::invalid_argument("residue_at_pole: multiplicity mismatch");

  // f = A / ((p-point)^m * B); residue = A_{m-1}(point) / ((m-1)! B(point)^m)
  // with A_{n+1} = A_n' B - (n+1) A_n B'
  UPoly B(MultiPoly(Rat(1)));
  for (size_t i = 0; i < f.den.size(); ++i)
    if (static_cast<int>(i) != found) B = B * f.den[i].poly.pow(f.den[i].exp);
  UPoly A = f.num;
  UPoly Bp = B.derivative();
  Rat fact = 1;
  for (unsigned n = 0; n + 1 < multiplicity; ++n) {
    A = A.derivative() * B - A * Bp * Rat(static_cast<long long>(n + 1));
    fact *= Rat(static_cast<long long>(n + 1));
  }
  FactoredFrac out;
  out.num = A.eval(point);
  Rat scale = fact;
  std::map<Atom, unsigned> atoms;
  for (size_t i = 0; i < f.den.size(); ++i)
    if (static_cast<int>(i) != found)
      factored_value_at(f.den[i], point, f.den[i].exp * multiplicity, scale, atoms);
  out.num = out.num / scale;
  out.den = std::move(atoms);
  return out;
}

PoleExpr residue_at_pole(const RationalFunction& f, const MultiPoly& point,
                         unsigned multiplicity) {
  return reduce_fracs({residue_at_pole_raw(f, point, multiplicity)});
}

}  // namespace wdvv
