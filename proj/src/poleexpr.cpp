#include "wdvv/poleexpr.hpp"

#include <sstream>
#include <stdexcept>

namespace wdvv {

bool Atom::operator<(const Atom& o) const {
  if (var != o.var) return var_name_less(var, o.var);
  if (shift == o.shift) return false;
  return shift.str() < o.shift.str();
}

std::pair<Rat, Atom> atomize(const MultiPoly& L) {
  for (const auto& v : L.vars()) {
    if (L.degree_in(v) != 1) continue;
    MultiPoly c1 = L.coeff_of(v, 1);
    if (!c1.is_constant()) continue;
    Rat c = c1.constant_value();
    MultiPoly shift = -(L.coeff_of(v, 0)) / c;
    return {c, Atom{v, shift}};
  }
  throw std::domain_error("atomize: no variable with rational linear coefficient in " +
                          L.str());
}

PoleExpr::PoleExpr(MultiPoly poly, std::map<std::pair<Atom, unsigned>, MultiPoly> terms)
    : poly_(std::move(poly)) {
  for (const auto& [key, num] : terms) add_term(key.first, key.second, num);
}

PoleExpr PoleExpr::pole(const Atom& a, unsigned exp, const MultiPoly& num) {
  PoleExpr e;
  e.add_term(a, exp, num);
  return e;
}

void PoleExpr::add_term(const Atom& a, unsigned exp, const MultiPoly& num) {
  // reduce the numerator modulo the atom so each layer is free of a.var
  MultiPoly cur = num;
  unsigned e = exp;
  while (e >= 1) {
    auto [q, r] = cur.div_linear(a.var, a.shift);
    if (!r.is_zero()) {
      auto key = std::make_pair(a, e);
      auto [it, fresh] = terms_.try_emplace(key, r);
      if (!fresh) {
        it->second = it->second + r;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    cur = q;
    --e;
    if (cur.is_zero()) return;
  }
  poly_ = poly_ + cur;
}

PoleExpr PoleExpr::operator+(const PoleExpr& o) const {
  PoleExpr r = *this;
  r.poly_ = r.poly_ + o.poly_;
  for (const auto& [key, num] : o.terms_) r.add_term(key.first, key.second, num);
  return r;
}

PoleExpr PoleExpr::operator-(const PoleExpr& o) const { return *this + (-o); }

PoleExpr PoleExpr::operator-() const {
  PoleExpr r;
  r.poly_ = -poly_;
  for (const auto& [key, num] : terms_) r.terms_[key] = -num;
  return r;
}

PoleExpr PoleExpr::operator*(const MultiPoly& m) const {
  PoleExpr r;
  r.poly_ = poly_ * m;
  for (const auto& [key, num] : terms_) r.add_term(key.first, key.second, num * m);
  return r;
}

PoleExpr PoleExpr::operator*(const Rat& c) const {
  if (c == 0) return PoleExpr();
  PoleExpr r;
  r.poly_ = poly_ * c;
  for (const auto& [key, num] : terms_) r.terms_[key] = num * c;
  return r;
}

bool PoleExpr::operator==(const PoleExpr& o) const {
  if (!(poly_ == o.poly_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first.first == jt->first.first)) return false;
    if (it->first.second != jt->first.second) return false;
    if (!(it->second == jt->second)) return false;
  }
  return true;
}

PoleExpr PoleExpr::derivative(const std::string& name) const {
  PoleExpr r;
  r.poly_ = poly_.derivative(name);
  for (const auto& [key, num] : terms_) {
    const auto& [a, e] = key;
    r.add_term(a, e, num.derivative(name));
    // d/dname (var - shift)
    MultiPoly dL = (name == a.var) ? MultiPoly(Rat(1)) : MultiPoly();
    dL = dL - a.shift.derivative(name);
    if (!dL.is_zero())
      r.add_term(a, e + 1, num * dL * Rat(-static_cast<long long>(e)));
  }
  return r;
}

PoleExpr PoleExpr::divide_by_atom(const Atom& a) const {
  PoleExpr r;
  auto [q, rem] = poly_.div_linear(a.var, a.shift);
  r.poly_ = q;
  if (!rem.is_zero()) r.add_term(a, 1, rem);
  for (const auto& [key, num] : terms_) {
    const auto& [atom, e] = key;
    if (atom == a) {
      r.add_term(a, e + 1, num);
      continue;
    }
    auto [qn, rn] = num.div_linear(a.var, a.shift);
    if (!rn.is_zero())
      throw std::domain_error(
          "divide_by_atom: pole numerator not divisible, result leaves the ring");
    r.add_term(atom, e, qn);
  }
  return r;
}

PoleExpr PoleExpr::substitute(const std::string& name, const MultiPoly& value) const {
  PoleExpr r;
  r.poly_ = poly_.substitute(name, value);
  for (const auto& [key, num] : terms_) {
    const auto& [a, e] = key;
    MultiPoly ns = num.substitute(name, value);
    MultiPoly L = a.linear().substitute(name, value);
    if (L.is_zero())
      throw std::domain_error("substitute: pole locus collapses to zero");
    if (L.is_constant()) {
      Rat c = L.constant_value();
      Rat inv = 1;
      for (unsigned i = 0; i < e; ++i) inv /= c;
      r.poly_ = r.poly_ + ns * inv;
      continue;
    }
    auto [c, atom] = atomize(L);
    Rat inv = 1;
    for (unsigned i = 0; i < e; ++i) inv /= c;
    r.add_term(atom, e, ns * inv);
  }
  return r;
}

Rat PoleExpr::eval(const std::map<std::string, Rat>& point) const {
  Rat total = poly_.eval(point);
  for (const auto& [key, num] : terms_) {
    const auto& [a, e] = key;
    Rat L = a.linear().eval(point);
    if (L == 0) throw std::domain_error("eval: point lies on a pole locus");
    Rat d = 1;
    for (unsigned i = 0; i < e; ++i) d *= L;
    total += num.eval(point) / d;
  }
  return total;
}

std::string PoleExpr::str() const {
  std::ostringstream os;
  bool first = true;
  if (!poly_.is_zero()) {
    os << poly_.str();
    first = false;
  }
  for (const auto& [key, num] : terms_) {
    const auto& [a, e] = key;
    if (!first) os << " + ";
    os << "(" << num.str() << ")/(" << a.linear().str() << ")";
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

namespace {

// divides f exactly by L^e where L is a (possibly constant) linear form
MultiPoly divide_exact_by_linear_power(MultiPoly f, const MultiPoly& L, unsigned e) {
  if (L.is_zero()) throw std::domain_error("division by vanishing linear form");
  if (L.is_constant()) {
    Rat c = L.constant_value();
    for (unsigned i = 0; i < e; ++i) f = f / c;
    return f;
  }
  auto [scale, atom] = atomize(L);
  for (unsigned i = 0; i < e; ++i)
    f = f.divide_linear_exact(atom.var, atom.shift) / scale;
  return f;
}

}  // namespace

PoleExpr reduce_fracs(const std::vector<FactoredFrac>& fracs) {
  if (fracs.empty()) return PoleExpr();
  std::map<Atom, unsigned> common;
  for (const auto& f : fracs)
    for (const auto& [a, e] : f.den)
      common[a] = std::max(common[a], e);
  MultiPoly num;
  for (const auto& f : fracs) {
    MultiPoly t = f.num;
    for (const auto& [a, e] : common) {
      auto it = f.den.find(a);
      unsigned have = it == f.den.end() ? 0u : it->second;
      if (e > have) t = t * a.linear().pow(e - have);
    }
    num = num + t;
  }
  std::vector<std::pair<Atom, unsigned>> atoms(common.begin(), common.end());
  PoleExpr out;
  for (size_t i = 0; i < atoms.size(); ++i) {
    const Atom& a = atoms[i].first;
    for (unsigned j = atoms[i].second; j >= 1; --j) {
      MultiPoly r = num.substitute(a.var, a.shift);
      if (!r.is_zero()) {
        // principal-part numerator: divide out the other atoms at this locus
        MultiPoly c = r;
        for (size_t l = i + 1; l < atoms.size(); ++l) {
          MultiPoly Le = atoms[l].first.linear().substitute(a.var, a.shift);
          c = divide_exact_by_linear_power(std::move(c), Le, atoms[l].second);
        }
        out = out + PoleExpr::pole(a, j, c);
        MultiPoly back = c;
        for (size_t l = i + 1; l < atoms.size(); ++l)
          back = back * atoms[l].first.linear().pow(atoms[l].second);
        num = num - back;
      }
      num = num.divide_linear_exact(a.var, a.shift);
    }
  }
  out = out + PoleExpr(num);
  return out;
}

}  // namespace wdvv
