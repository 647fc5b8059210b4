#pragma once

#include <map>
#include <string>
#include <vector>

#include "wdvv/multipoly.hpp"

namespace wdvv {

// Linear pole locus (var - shift) with shift free of var. Atoms are stored
// monic; rescalings are absorbed into numerators.
struct Atom {
  std::string var;
  MultiPoly shift;

  MultiPoly linear() const { return MultiPoly::var(var) - shift; }
  bool operator==(const Atom& o) const { return var == o.var && shift == o.shift; }
  bool operator<(const Atom& o) const;
};

// Writes a linear polynomial L as c*(var - shift) with the canonical root
// variable (the var_name_less-smallest variable whose coefficient in L is a
// nonzero rational constant). Throws if L admits no such variable.
std::pair<Rat, Atom> atomize(const MultiPoly& L);

// Element of the ring Q[vars][1/(atoms)]: a polynomial part plus pole terms
// num/(var - shift)^exp. Normal form: every pole numerator is reduced to be
// free of its atom's variable, zero numerators are dropped, and equal
// (atom, exp) keys are merged, so equality is structural.
class PoleExpr {
 public:
  PoleExpr() = default;
  /*implicit*/ PoleExpr(MultiPoly poly) : poly_(std::move(poly)) {}
  PoleExpr(MultiPoly poly, std::map<std::pair<Atom, unsigned>, MultiPoly> terms);

  static PoleExpr pole(const Atom& a, unsigned exp, const MultiPoly& num);

  const MultiPoly& poly() const { return poly_; }
  const std::map<std::pair<Atom, unsigned>, MultiPoly>& pole_terms() const {
    return terms_;
  }
  bool is_zero() const { return poly_.is_zero() && terms_.empty(); }
  bool is_polynomial() const { return terms_.empty(); }

  PoleExpr operator+(const PoleExpr& o) const;
  PoleExpr operator-(const PoleExpr& o) const;
  PoleExpr operator-() const;
  PoleExpr operator*(const MultiPoly& m) const;
  PoleExpr operator*(const Rat& c) const;
  bool operator==(const PoleExpr& o) const;
  bool operator!=(const PoleExpr& o) const { return !(*this == o); }

  PoleExpr derivative(const std::string& name) const;
  // divide the whole expression by (var - shift); pole numerators must divide
  // exactly unless they sit on the same atom, the polynomial part may spawn a
  // new pole term
  PoleExpr divide_by_atom(const Atom& a) const;
  // substitute a variable by a polynomial everywhere, re-rooting atoms as
  // needed; throws if an atom's linear form collapses to zero
  PoleExpr substitute(const std::string& name, const MultiPoly& value) const;
  Rat eval(const std::map<std::string, Rat>& point) const;

  std::string str() const;

 private:
  MultiPoly poly_;
  std::map<std::pair<Atom, unsigned>, MultiPoly> terms_;

  void add_term(const Atom& a, unsigned exp, const MultiPoly& num);
};

// num / prod of atom powers, the raw shape produced by residue extraction
struct FactoredFrac {
  MultiPoly num;
  std::map<Atom, unsigned> den;
};

// Combines fractions over a common denominator and peels principal parts
// atom by atom. Succeeds exactly when the sum lies in the single-atom ring.
PoleExpr reduce_fracs(const std::vector<FactoredFrac>& fracs);

}  // namespace wdvv
