#include "wdvv/exprtree.hpp"

#include <cmath>
#include <stdexcept>

namespace wdvv {

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr Expr::constant(const Rat& c) {
  Expr e;
  e.kind_ = Kind::Const;
  e.cval_ = c;
  return make(std::move(e));
}

ExprPtr Expr::variable(const std::string& name) {
  Expr e;
  e.kind_ = Kind::Var;
  e.name_ = name;
  return make(std::move(e));
}

ExprPtr Expr::sum(std::vector<ExprPtr> terms) {
  std::vector<ExprPtr> flat;
  Rat c(0);
  for (auto& t : terms) {
    if (!t) throw std::invalid_argument("sum: null argument");
    if (t->kind_ == Kind::Const) {
      c += t->cval_;
    } else if (t->kind_ == Kind::Sum) {
      for (const auto& s : t->args_) {
        if (s->kind_ == Kind::Const) c += s->cval_;
        else flat.push_back(s);
      }
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (c != 0) flat.push_back(constant(c));
  if (flat.empty()) return constant(Rat(0));
  if (flat.size() == 1) return flat.front();
  Expr e;
  e.kind_ = Kind::Sum;
  e.args_ = std::move(flat);
  return make(std::move(e));
}

ExprPtr Expr::product(std::vector<ExprPtr> factors) {
  std::vector<ExprPtr> flat;
  Rat c(1);
  for (auto& f : factors) {
    if (!f) throw std::invalid_argument("product: null argument");
    if (f->kind_ == Kind::Const) {
      c *= f->cval_;
    } else if (f->kind_ == Kind::Prod) {
      for (const auto& s : f->args_) {
        if (s->kind_ == Kind::Const) c *= s->cval_;
        else flat.push_back(s);
      }
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (c == 0) return constant(Rat(0));
  if (c != 1) flat.push_back(constant(c));
  if (flat.empty()) return constant(Rat(1));
  if (flat.size() == 1) return flat.front();
  Expr e;
  e.kind_ = Kind::Prod;
  e.args_ = std::move(flat);
  return make(std::move(e));
}

ExprPtr Expr::ipow(ExprPtr base, int p) {
  if (!base) throw std::invalid_argument("ipow: null argument");
  if (p == 0) return constant(Rat(1));
  if (p == 1) return base;
  if (base->kind_ == Kind::Const) {
    Rat b = base->cval_;
    if (b == 0 && p < 0) throw std::domain_error("ipow: zero to a negative power");
    Rat r(1);
    for (int i = 0; i < std::abs(p); ++i) r *= b;
    return constant(p > 0 ? r : Rat(1) / r);
  }
  Expr e;
  e.kind_ = Kind::IPow;
  e.power_ = p;
  e.args_ = {std::move(base)};
  return make(std::move(e));
}

ExprPtr Expr::log(ExprPtr arg) {
  if (!arg) throw std::invalid_argument("log: null argument");
  Expr e;
  e.kind_ = Kind::Log;
  e.args_ = {std::move(arg)};
  return make(std::move(e));
}

ExprPtr Expr::exp(ExprPtr arg) {
  if (!arg) throw std::invalid_argument("exp: null argument");
  if (arg->is_zero()) return constant(Rat(1));
  Expr e;
  e.kind_ = Kind::Exp;
  e.args_ = {std::move(arg)};
  return make(std::move(e));
}

ExprPtr Expr::derivative(const std::string& name) const {
  switch (kind_) {
    case Kind::Const:
      return constant(Rat(0));
    case Kind::Var:
      return constant(Rat(name_ == name ? 1 : 0));
    case Kind::Sum: {
      std::vector<ExprPtr> d;
      for (const auto& a : args_) d.push_back(a->derivative(name));
      return sum(std::move(d));
    }
    case Kind::Prod: {
      std::vector<ExprPtr> terms;
      for (size_t i = 0; i < args_.size(); ++i) {
        ExprPtr di = args_[i]->derivative(name);
        if (di->is_zero()) continue;
        std::vector<ExprPtr> fs;
        for (size_t j = 0; j < args_.size(); ++j)
          fs.push_back(j == i ? di : args_[j]);
        terms.push_back(product(std::move(fs)));
      }
      return sum(std::move(terms));
    }
    case Kind::IPow: {
      ExprPtr db = args_[0]->derivative(name);
      if (db->is_zero()) return db;
      return product({constant(Rat(power_)), ipow(args_[0], power_ - 1), db});
    }
    case Kind::Log: {
      ExprPtr da = args_[0]->derivative(name);
      if (da->is_zero()) return da;
      return product({da, ipow(args_[0], -1)});
    }
    case Kind::Exp: {
      ExprPtr da = args_[0]->derivative(name);
      if (da->is_zero()) return da;
      return product({da, exp(args_[0])});
    }
  }
  throw std::logic_error("derivative: unreachable");
}

Cplx Expr::eval(const std::map<std::string, Cplx>& point) const {
  switch (kind_) {
    case Kind::Const:
      return Cplx(rat_to_ld(cval_));
    case Kind::Var: {
      auto it = point.find(name_);
      if (it == point.end())
        throw std::invalid_argument("eval: no value for variable " + name_);
      return it->second;
    }
    case Kind::Sum: {
      Cplx v(0);
      for (const auto& a : args_) v += a->eval(point);
      return v;
    }
    case Kind::Prod: {
      Cplx v(1);
      for (const auto& a : args_) v *= a->eval(point);
      return v;
    }
    case Kind::IPow: {
      Cplx b = args_[0]->eval(point);
      int p = power_;
      if (p < 0) {
        b = Cplx(1) / b;
        p = -p;
      }
      Cplx v(1);
      for (int i = 0; i < p; ++i) v *= b;
      return v;
    }
    case Kind::Log:
      return std::log(args_[0]->eval(point));
    case Kind::Exp:
      return std::exp(args_[0]->eval(point));
  }
  throw std::logic_error("eval: unreachable");
}

std::string Expr::str() const {
  switch (kind_) {
    case Kind::Const:
      return rat_to_string(cval_);
    case Kind::Var:
      return name_;
    case Kind::Sum: {
      std::string s = "(";
      for (size_t i = 0; i < args_.size(); ++i) {
        if (i) s += " + ";
        s += args_[i]->str();
      }
      return s + ")";
    }
    case Kind::Prod: {
      std::string s;
      for (size_t i = 0; i < args_.size(); ++i) {
        if (i) s += "*";
        s += args_[i]->str();
      }
      return s;
    }
    case Kind::IPow:
      return args_[0]->str() + "^" + std::to_string(power_);
    case Kind::Log:
      return "log" + args_[0]->str();
    case Kind::Exp:
      return "exp" + args_[0]->str();
  }
  return {};
}

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b) { return Expr::sum({a, b}); }

ExprPtr operator-(const ExprPtr& a, const ExprPtr& b) {
  return Expr::sum({a, Expr::product({Expr::constant(Rat(-1)), b})});
}

ExprPtr operator*(const ExprPtr& a, const ExprPtr& b) {
  return Expr::product({a, b});
}

ExprPtr expr_from_poly(const MultiPoly& p) {
  std::vector<ExprPtr> terms;
  const auto& vars = p.vars();
  for (const auto& [exp, coeff] : p.terms()) {
    std::vector<ExprPtr> fs{Expr::constant(coeff)};
    for (size_t v = 0; v < vars.size(); ++v)
      if (v < exp.size() && exp[v])
        fs.push_back(Expr::ipow(Expr::variable(vars[v]), exp[v]));
    terms.push_back(Expr::product(std::move(fs)));
  }
  return Expr::sum(std::move(terms));
}

}  // namespace wdvv
