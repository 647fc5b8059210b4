#include "wdvv/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace wdvv {

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::x(unsigned pow) {
  std::vector<MultiPoly> c(pow + 1);
  c[pow] = MultiPoly(Rat(1));
  return UPoly(std::move(c));
}

UPoly UPoly::linear(const MultiPoly& root) {
  return UPoly(std::vector<MultiPoly>{-root, MultiPoly(Rat(1))});
}

const MultiPoly& UPoly::coeff(unsigned d) const {
  static const MultiPoly zero;
  return d < coeffs_.size() ? coeffs_[d] : zero;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<MultiPoly> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < coeffs_.size()) c[i] = c[i] + coeffs_[i];
    if (i < o.coeffs_.size()) c[i] = c[i] + o.coeffs_[i];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<MultiPoly> c = coeffs_;
  for (auto& m : c) m = -m;
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return UPoly();
  std::vector<MultiPoly> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const MultiPoly& m) const {
  std::vector<MultiPoly> c = coeffs_;
  for (auto& x : c) x = x * m;
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rat& r) const {
  std::vector<MultiPoly> c = coeffs_;
  for (auto& x : c) x = x * r;
  return UPoly(std::move(c));
}

bool UPoly::operator==(const UPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  return true;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r(MultiPoly(Rat(1)));
  UPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return UPoly();
  std::vector<MultiPoly> c(coeffs_.size() - 1);
  for (size_t d = 1; d < coeffs_.size(); ++d)
    c[d - 1] = coeffs_[d] * Rat(static_cast<long long>(d));
  return UPoly(std::move(c));
}

UPoly UPoly::derivative_param(const std::string& name) const {
  std::vector<MultiPoly> c = coeffs_;
  for (auto& m : c) m = m.derivative(name);
  return UPoly(std::move(c));
}

MultiPoly UPoly::eval(const MultiPoly& point) const {
  MultiPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * point + *it;
  return acc;
}

std::pair<UPoly, MultiPoly> UPoly::div_linear(const MultiPoly& root) const {
  if (coeffs_.empty()) return {UPoly(), MultiPoly()};
  size_t n = coeffs_.size() - 1;
  if (n == 0) return {UPoly(), coeffs_[0]};
  std::vector<MultiPoly> q(n);
  q[n - 1] = coeffs_[n];
  for (size_t d = n - 1; d >= 1; --d) q[d - 1] = coeffs_[d] + root * q[d];
  MultiPoly rem = coeffs_[0] + root * q[0];
  return {UPoly(std::move(q)), rem};
}

UPoly UPoly::divide_linear_exact(const MultiPoly& root) const {
  auto [q, r] = div_linear(root);
  if (!r.is_zero())
    throw std::domain_error("divide_linear_exact: (p - root) does not divide");
  return q;
}

std::vector<MultiPoly> UPoly::reversed() const {
  std::vector<MultiPoly> r(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

MultiPoly UPoly::expand(const std::string& name) const {
  return eval(MultiPoly::var(name));
}

std::string UPoly::str(const std::string& name) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t d = coeffs_.size(); d-- > 0;) {
    if (coeffs_[d].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[d].str() << ")";
    if (d > 0) {
      os << "*" << name;
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

}  // namespace wdvv
