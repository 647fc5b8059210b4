#include "wdvv/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wdvv {

bool var_name_less(const std::string& a, const std::string& b) {
  size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[ia]));
    bool db = std::isdigit(static_cast<unsigned char>(b[ib]));
    if (da && db) {
      size_t ja = ia, jb = ib;
      while (ja < a.size() && std::isdigit(static_cast<unsigned char>(a[ja]))) ++ja;
      while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
      // compare the numeric runs by value (longer run of significant digits wins)
      std::string na = a.substr(ia, ja - ia), nb = b.substr(ib, jb - ib);
      na.erase(0, na.find_first_not_of('0') == std::string::npos ? na.size() - 1
                                                                 : na.find_first_not_of('0'));
      nb.erase(0, nb.find_first_not_of('0') == std::string::npos ? nb.size() - 1
                                                                 : nb.find_first_not_of('0'));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      ia = ja; ib = jb;
    } else {
      if (a[ia] != b[ib]) return a[ia] < b[ib];
      ++ia; ++ib;
    }
  }
  return a.size() - ia < b.size() - ib;
}

MultiPoly MultiPoly::var(const std::string& name, unsigned pow) {
  MultiPoly p;
  p.vars_ = {name};
  if (pow == 0) { p.terms_[Exp{}] = 1; p.vars_.clear(); return p; }
  p.terms_[Exp{static_cast<uint16_t>(pow)}] = 1;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exp& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](uint16_t x) { return x == 0; });
}

Rat MultiPoly::constant_value() const {
  for (const auto& [e, c] : terms_) {
    if (std::all_of(e.begin(), e.end(), [](uint16_t x) { return x == 0; })) return c;
  }
  return Rat(0);
}

bool MultiPoly::depends_on(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return false;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  for (const auto& [e, c] : terms_)
    if (idx < e.size() && e[idx] > 0) return true;
  return false;
}

void MultiPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) it = terms_.erase(it); else ++it;
  }
}

void MultiPoly::remap(const std::vector<std::string>& new_vars) {
  if (new_vars == vars_) return;
  std::vector<int> pos(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i], var_name_less);
    if (it == new_vars.end() || *it != vars_[i])
      throw std::logic_error("remap: variable missing from target table");
    pos[i] = static_cast<int>(it - new_vars.begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exp ne(new_vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) ne[static_cast<size_t>(pos[i])] = e[i];
    out[std::move(ne)] = c;
  }
  vars_ = new_vars;
  terms_ = std::move(out);
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(u), var_name_less);
  a.remap(u);
  b.remap(u);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly a = *this, b = o;
  align(a, b);
  for (const auto& [e, c] : b.terms_) {
    auto [it, fresh] = a.terms_.try_emplace(e, c);
    if (!fresh) it->second += c;
  }
  a.prune();
  return a;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly a = *this, b = o;
  align(a, b);
  MultiPoly r;
  r.vars_ = a.vars_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exp e(a.vars_.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) {
        unsigned s = (i < ea.size() ? ea[i] : 0u) + (i < eb.size() ? eb[i] : 0u);
        if (s > 0xffff) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<uint16_t>(s);
      }
      Rat prod = ca * cb;
      auto [it, fresh] = r.terms_.try_emplace(std::move(e), prod);
      if (!fresh) it->second += prod;
    }
  }
  r.prune();
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  if (c == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::operator/(const Rat& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  return *this * (Rat(1) / c);
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  MultiPoly a = *this, b = o;
  align(a, b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(Rat(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return MultiPoly();
  size_t idx = static_cast<size_t>(it - vars_.begin());
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (idx >= e.size() || e[idx] == 0) continue;
    Exp ne = e;
    ne[idx] -= 1;
    r.terms_[std::move(ne)] = c * e[idx];
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return *this;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  // group terms by the exponent of `name`, then Horner in `value`
  std::map<unsigned, MultiPoly> groups;
  for (const auto& [e, c] : terms_) {
    unsigned d = idx < e.size() ? e[idx] : 0u;
    Exp ne = e;
    if (idx < ne.size()) ne[idx] = 0;
    MultiPoly& g = groups[d];
    if (g.vars_.empty() && g.terms_.empty()) g.vars_ = vars_;
    auto [jt, fresh] = g.terms_.try_emplace(std::move(ne), c);
    if (!fresh) jt->second += c;
  }
  MultiPoly acc;
  unsigned prev = 0;
  bool first = true;
  for (auto git = groups.rbegin(); git != groups.rend(); ++git) {
    if (!first) acc = acc * value.pow(prev - git->first);
    acc = acc + git->second;
    prev = git->first;
    first = false;
  }
  if (!first && prev > 0) acc = acc * value.pow(prev);
  return acc.compact();
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
  // simultaneous: route through fresh temporaries to avoid capture
  MultiPoly r = *this;
  std::map<std::string, MultiPoly> step2;
  int n = 0;
  for (const auto& [name, val] : values) {
    std::string tmp = "@tmp" + std::to_string(n++);
    r = r.substitute(name, MultiPoly::var(tmp));
    step2[tmp] = val;
  }
  for (const auto& [tmp, val] : step2) r = r.substitute(tmp, val);
  return r;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw std::invalid_argument("eval: no value for variable " + vars_[i]);
      Rat p = it->second;
      for (uint16_t k = 0; k < e[i]; ++k) t *= p;
    }
    total += t;
  }
  return total;
}

long double MultiPoly::eval_ld(const std::map<std::string, long double>& point) const {
  long double total = 0;
  for (const auto& [e, c] : terms_) {
    long double t = rat_to_ld(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw std::invalid_argument("eval_ld: no value for variable " + vars_[i]);
      long double p = it->second, acc = 1;
      for (uint16_t k = 0; k < e[i]; ++k) acc *= p;
      t *= acc;
    }
    total += t;
  }
  return total;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::div_linear(const std::string& name,
                                                      const MultiPoly& shift) const {
  if (shift.depends_on(name))
    throw std::invalid_argument("div_linear: shift depends on the division variable");
  unsigned n = degree_in(name);
  if (n == 0) return {MultiPoly(), *this};
  // synthetic division: q_{n-1} = c_n, q_{d-1} = c_d + shift*q_d, r = c_0 + shift*q_0
  std::vector<MultiPoly> c(n + 1);
  for (unsigned d = 0; d <= n; ++d) c[d] = coeff_of(name, d);
  std::vector<MultiPoly> q(n);
  q[n - 1] = c[n];
  for (unsigned d = n - 1; d >= 1; --d) q[d - 1] = c[d] + shift * q[d];
  MultiPoly rem = c[0] + shift * q[0];
  MultiPoly quot;
  MultiPoly v = MultiPoly::var(name);
  for (unsigned d = 0; d < n; ++d) quot = quot + q[d] * v.pow(d);
  return {quot.compact(), rem.compact()};
}

MultiPoly MultiPoly::divide_linear_exact(const std::string& name,
                                         const MultiPoly& shift) const {
  auto [q, r] = div_linear(name, shift);
  if (!r.is_zero())
    throw std::domain_error("divide_linear_exact: nonzero remainder dividing by (" +
                            name + " - ...)");
  return q;
}

unsigned MultiPoly::degree_in(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    if (idx < e.size()) d = std::max<unsigned>(d, e[idx]);
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (uint16_t x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rat MultiPoly::weighted_degree(const Exp& e, const std::vector<std::string>& vars,
                               const std::map<std::string, Rat>& weights) {
  Rat d = 0;
  for (size_t i = 0; i < e.size() && i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    auto it = weights.find(vars[i]);
    if (it != weights.end()) d += it->second * e[i];
  }
  return d;
}

std::optional<Rat> MultiPoly::homogeneous_degree(
    const std::map<std::string, Rat>& weights) const {
  std::optional<Rat> deg;
  for (const auto& [e, c] : terms_) {
    Rat d = weighted_degree(e, vars_, weights);
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

std::map<MultiPoly::Exp, MultiPoly> MultiPoly::split_by(
    const std::vector<std::string>& names) const {
  std::vector<int> idx(names.size(), -1);
  for (size_t j = 0; j < names.size(); ++j) {
    auto it = std::find(vars_.begin(), vars_.end(), names[j]);
    if (it != vars_.end()) idx[j] = static_cast<int>(it - vars_.begin());
  }
  std::map<Exp, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    Exp key(names.size(), 0);
    Exp ne = e;
    for (size_t j = 0; j < names.size(); ++j) {
      if (idx[j] >= 0 && static_cast<size_t>(idx[j]) < e.size()) {
        key[j] = e[static_cast<size_t>(idx[j])];
        ne[static_cast<size_t>(idx[j])] = 0;
      }
    }
    MultiPoly& g = out[key];
    if (g.vars_.empty() && g.terms_.empty()) g.vars_ = vars_;
    auto [jt, fresh] = g.terms_.try_emplace(std::move(ne), c);
    if (!fresh) jt->second += c;
  }
  for (auto& [k, g] : out) g = g.compact();
  return out;
}

MultiPoly MultiPoly::coeff_of(const std::string& name, unsigned k) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return k == 0 ? *this : MultiPoly();
  size_t idx = static_cast<size_t>(it - vars_.begin());
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    unsigned d = idx < e.size() ? e[idx] : 0u;
    if (d != k) continue;
    Exp ne = e;
    if (idx < ne.size()) ne[idx] = 0;
    r.terms_[std::move(ne)] = c;
  }
  return r.compact();
}

MultiPoly MultiPoly::compact(const std::vector<std::string>& keep) const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  std::vector<std::string> nv;
  for (size_t i = 0; i < vars_.size(); ++i) {
    bool forced = std::find(keep.begin(), keep.end(), vars_[i]) != keep.end();
    if (used[i] || forced) nv.push_back(vars_[i]);
  }
  for (const auto& k : keep)
    if (std::find(nv.begin(), nv.end(), k) == nv.end()) nv.push_back(k);
  std::sort(nv.begin(), nv.end(), var_name_less);
  MultiPoly r;
  r.vars_ = nv;
  std::vector<int> pos(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(nv.begin(), nv.end(), vars_[i]);
    if (it != nv.end()) pos[i] = static_cast<int>(it - nv.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exp ne(nv.size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) ne[static_cast<size_t>(pos[i])] = e[i];
    r.terms_[std::move(ne)] = c;
  }
  return r;
}

namespace {

void append_monomial(std::ostream& os, const Rat& c, const std::string& body,
                     bool first, bool tex) {
  Rat a = c < 0 ? Rat(-c) : c;
  if (c < 0) os << (first ? "-" : " - ");
  else if (!first) os << " + ";
  bool unit = (a == 1) && !body.empty();
  if (!unit) {
    if (tex && denominator(a) != 1)
      os << "\\frac{" << numerator(a).str() << "}{" << denominator(a).str() << "}";
    else os << rat_to_string(a);
    if (!body.empty()) os << (tex ? " " : "*");
  }
  os << body;
}

std::string var_tex(const std::string& name) {
  // split trailing digits into a subscript
  size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  if (i == name.size() || i == 0) return name;
  return name.substr(0, i) + "_{" + name.substr(i) + "}";
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::ostringstream body;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (any) body << "*";
      body << vars_[i];
      if (e[i] > 1) body << "^" << e[i];
      any = true;
    }
    append_monomial(os, c, body.str(), first, false);
    first = false;
  }
  return os.str();
}

std::string MultiPoly::latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::ostringstream body;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      body << var_tex(vars_[i]);
      if (e[i] > 1) body << "^{" << e[i] << "}";
    }
    append_monomial(os, c, body.str(), first, true);
    first = false;
  }
  return os.str();
}

}  // namespace wdvv
