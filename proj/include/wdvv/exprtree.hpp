#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wdvv/multipoly.hpp"

namespace wdvv {

using Cplx = std::complex<long double>;

// Immutable closed-form expression tree over constants, variables, sums,
// products, integer powers, log and exp, with exact symbolic differentiation.
// Constructors fold constants and flatten nested sums and products.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  enum class Kind { Const, Var, Sum, Prod, IPow, Log, Exp };

  static ExprPtr constant(const Rat& c);
  static ExprPtr constant(long long c) { return constant(Rat(c)); }
  static ExprPtr variable(const std::string& name);
  static ExprPtr sum(std::vector<ExprPtr> terms);
  static ExprPtr product(std::vector<ExprPtr> factors);
  static ExprPtr ipow(ExprPtr base, int e);
  static ExprPtr log(ExprPtr arg);
  static ExprPtr exp(ExprPtr arg);

  Kind kind() const { return kind_; }
  const Rat& cval() const { return cval_; }
  const std::string& name() const { return name_; }
  const std::vector<ExprPtr>& args() const { return args_; }
  int power() const { return power_; }

  bool is_zero() const { return kind_ == Kind::Const && cval_ == 0; }

  ExprPtr derivative(const std::string& name) const;
  Cplx eval(const std::map<std::string, Cplx>& point) const;
  std::string str() const;

 private:
  Kind kind_ = Kind::Const;
  Rat cval_ = Rat(0);
  std::string name_;
  std::vector<ExprPtr> args_;
  int power_ = 1;
};

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b);

// polynomial as an expression tree
ExprPtr expr_from_poly(const MultiPoly& p);

}  // namespace wdvv
