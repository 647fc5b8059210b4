#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdvv/rational.hpp"

namespace wdvv {

// Orders variable names naturally: alphabetic prefix first, then numeric
// suffix by value, so "b2" < "b10" < "k1".
bool var_name_less(const std::string& a, const std::string& b);

// Sparse multivariate polynomial over Q. The variable table is kept sorted
// under var_name_less; operations on polynomials with different tables align
// them to the union first. Terms map exponent vectors (parallel to the table)
// to nonzero rational coefficients.
class MultiPoly {
 public:
  using Exp = std::vector<uint16_t>;
  using TermMap = std::map<Exp, Rat>;

  MultiPoly() = default;
  explicit MultiPoly(const Rat& c) { if (c != 0) terms_[Exp{}] = c; }
  explicit MultiPoly(long long c) : MultiPoly(Rat(c)) {}

  static MultiPoly var(const std::string& name, unsigned pow = 1);
  static MultiPoly constant(const Rat& c) { return MultiPoly(c); }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // constant term (coefficient of the empty monomial)
  Rat constant_value() const;
  bool depends_on(const std::string& name) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
  MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  MultiPoly operator*(const Rat& c) const;
  MultiPoly operator/(const Rat& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(const std::string& name) const;
  // substitute one variable by a polynomial value
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  // substitute several variables simultaneously
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;
  // full evaluation; throws if a variable has no assignment
  Rat eval(const std::map<std::string, Rat>& point) const;
  long double eval_ld(const std::map<std::string, long double>& point) const;

  // divide by (var - shift): returns {quotient, remainder}, remainder free of var.
  // shift must not depend on var.
  std::pair<MultiPoly, MultiPoly> div_linear(const std::string& name,
                                             const MultiPoly& shift) const;
  // exact division by (var - shift); throws if the remainder is nonzero
  MultiPoly divide_linear_exact(const std::string& name,
                                const MultiPoly& shift) const;

  unsigned degree_in(const std::string& name) const;
  int total_degree() const;  // -1 for the zero polynomial
  // weighted degree of one monomial under weights (unlisted vars weigh 0)
  static Rat weighted_degree(const Exp& e, const std::vector<std::string>& vars,
                             const std::map<std::string, Rat>& weights);
  // if every term has the same weighted degree, returns it
  std::optional<Rat> homogeneous_degree(const std::map<std::string, Rat>& weights) const;
  // splits f = sum over monomials in `names` of (monomial * cofactor);
  // the key records the exponents of `names` in their given order
  std::map<Exp, MultiPoly> split_by(const std::vector<std::string>& names) const;
  // coefficient of name^k as a polynomial in the remaining variables
  MultiPoly coeff_of(const std::string& name, unsigned k) const;

  std::string str() const;    // plain text, deterministic
  std::string latex() const;  // LaTeX body

  // rebuilds the table to exactly the variables that occur (plus `keep`)
  MultiPoly compact(const std::vector<std::string>& keep = {}) const;

  static void align(MultiPoly& a, MultiPoly& b);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void prune();
  void remap(const std::vector<std::string>& new_vars);
  friend class MultiPolyTestAccess;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

}  // namespace wdvv
