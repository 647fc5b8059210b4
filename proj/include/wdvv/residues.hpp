#pragma once

#include <optional>
#include <vector>

#include "wdvv/poleexpr.hpp"
#include "wdvv/upoly.hpp"

namespace wdvv {

// value of a polynomial at a special point, kept in factored form
// scale * prod (var - shift)^exp so later divisions stay exact
struct FactoredValue {
  Rat scale = 1;
  std::map<Atom, unsigned> atoms;
};

struct DenFactor {
  UPoly poly;
  unsigned exp = 1;
  // set iff poly == p - root (monic linear)
  std::optional<MultiPoly> root;
  // factored values of poly at special points, for nonlinear factors
  std::vector<std::pair<MultiPoly, FactoredValue>> values_at;
};

// Rational function num / prod(den_i^{exp_i}) in the distinguished symbol p
// with pole locations tracked explicitly through the factor list.
struct RationalFunction {
  UPoly num;
  std::vector<DenFactor> den;

  UPoly den_expanded() const;
};

// minus the coefficient of 1/p in the expansion at infinity; requires the
// denominator's leading coefficient to be a nonzero rational
MultiPoly residue_at_infinity(const RationalFunction& f);

// residue at a finite point whose explicit multiplicity in the factor list
// must equal `multiplicity`; raw form keeps the denominator factored
FactoredFrac residue_at_pole_raw(const RationalFunction& f, const MultiPoly& point,
                                 unsigned multiplicity);
PoleExpr residue_at_pole(const RationalFunction& f, const MultiPoly& point,
                         unsigned multiplicity);

}  // namespace wdvv
