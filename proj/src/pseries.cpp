#include "wdvv/pseries.hpp"

#include <stdexcept>

namespace wdvv {

PSeries::PSeries(std::vector<MultiPoly> coeffs, size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order);
}

PSeries PSeries::one(size_t order) {
  PSeries s = zero(order);
  if (order > 0) s.coeffs_[0] = MultiPoly(Rat(1));
  return s;
}

PSeries PSeries::x(size_t order) {
  PSeries s = zero(order);
  if (order > 1) s.coeffs_[1] = MultiPoly(Rat(1));
  return s;
}

PSeries PSeries::from_coeffs_low_first(std::vector<MultiPoly> coeffs, size_t order) {
  return PSeries(std::move(coeffs), order);
}

const MultiPoly& PSeries::coeff(size_t n) const {
  static const MultiPoly zero;
  return n < coeffs_.size() ? coeffs_[n] : zero;
}

namespace {
void check_orders(const PSeries& a, const PSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("PSeries: mismatched truncation orders");
}
}  // namespace

PSeries PSeries::operator+(const PSeries& o) const {
  check_orders(*this, o);
  std::vector<MultiPoly> c(order());
  for (size_t i = 0; i < order(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
  return PSeries(std::move(c), order());
}

PSeries PSeries::operator-(const PSeries& o) const { return *this + (-o); }

PSeries PSeries::operator-() const {
  std::vector<MultiPoly> c(order());
  for (size_t i = 0; i < order(); ++i) c[i] = -coeffs_[i];
  return PSeries(std::move(c), order());
}

PSeries PSeries::operator*(const PSeries& o) const {
  check_orders(*this, o);
  std::vector<MultiPoly> c(order());
  for (size_t i = 0; i < order(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; i + j < order(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    }
  }
  return PSeries(std::move(c), order());
}

PSeries PSeries::operator*(const MultiPoly& m) const {
  std::vector<MultiPoly> c(order());
  for (size_t i = 0; i < order(); ++i) c[i] = coeffs_[i] * m;
  return PSeries(std::move(c), order());
}

PSeries PSeries::operator*(const Rat& r) const {
  std::vector<MultiPoly> c(order());
  for (size_t i = 0; i < order(); ++i) c[i] = coeffs_[i] * r;
  return PSeries(std::move(c), order());
}

bool PSeries::operator==(const PSeries& o) const {
  if (order() != o.order()) return false;
  for (size_t i = 0; i < order(); ++i)
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  return true;
}

PSeries PSeries::shift_up(size_t k) const {
  std::vector<MultiPoly> c(order());
  for (size_t i = 0; i + k < order(); ++i) c[i + k] = coeffs_[i];
  return PSeries(std::move(c), order());
}

PSeries PSeries::shift_down(size_t k) const {
  for (size_t i = 0; i < k && i < order(); ++i)
    if (!coeffs_[i].is_zero())
      throw std::domain_error("shift_down: low-order coefficients are nonzero");
  std::vector<MultiPoly> c(order());
  for (size_t i = k; i < order(); ++i) c[i - k] = coeffs_[i];
  return PSeries(std::move(c), order());
}

PSeries PSeries::reciprocal() const {
  if (order() == 0) return *this;
  if (!coeffs_[0].is_constant() || coeffs_[0].constant_value() == 0)
    throw std::domain_error("reciprocal: constant term is not an invertible rational");
  Rat c0 = coeffs_[0].constant_value();
  std::vector<MultiPoly> g(order());
  g[0] = MultiPoly(Rat(1) / c0);
  for (size_t n = 1; n < order(); ++n) {
    MultiPoly acc;
    for (size_t m = 1; m <= n; ++m) acc = acc + coeffs_[m] * g[n - m];
    g[n] = acc * (Rat(-1) / c0);
  }
  return PSeries(std::move(g), order());
}

PSeries PSeries::compose(const PSeries& g) const {
  check_orders(*this, g);
  if (g.order() > 0 && !g.coeffs_[0].is_zero())
    throw std::domain_error("compose: inner series must vanish at 0");
  // Horner from the top coefficient down
  PSeries acc = zero(order());
  for (size_t d = order(); d-- > 0;) {
    acc = acc * g;
    if (!coeffs_[d].is_zero()) acc = acc + one(order()) * coeffs_[d];
  }
  return acc;
}

PSeries PSeries::revert() const {
  if (order() < 2) throw std::domain_error("revert: order too small");
  if (!coeffs_[0].is_zero()) throw std::domain_error("revert: constant term nonzero");
  if (!coeffs_[1].is_constant() || coeffs_[1].constant_value() == 0)
    throw std::domain_error("revert: linear coefficient is not an invertible rational");
  Rat f1 = coeffs_[1].constant_value();
  std::vector<MultiPoly> g(order());
  g[1] = MultiPoly(Rat(1) / f1);
  // solve f(g) = x coefficient by coefficient
  for (size_t n = 2; n < order(); ++n) {
    PSeries gp(std::vector<MultiPoly>(g.begin(), g.end()), order());
    PSeries h = compose(gp);
    // coefficient of x^n in f(g) with g_n still zero; correcting term is f1*g_n
    g[n] = -h.coeff(n) / f1;
  }
  return PSeries(std::move(g), order());
}

PSeries PSeries::pow_rational(const Rat& q) const {
  if (order() == 0) return *this;
  if (!coeffs_[0].is_constant() || coeffs_[0].constant_value() != 1)
    throw std::domain_error("pow_rational: constant term must be 1");
  // from g'f = q f'g: n*g_n = sum_{m=1..n} ((q+1)m - n) f_m g_{n-m}
  std::vector<MultiPoly> g(order());
  g[0] = MultiPoly(Rat(1));
  for (size_t n = 1; n < order(); ++n) {
    MultiPoly acc;
    for (size_t m = 1; m <= n; ++m) {
      Rat w = (q + 1) * Rat(static_cast<long long>(m)) - Rat(static_cast<long long>(n));
      if (w == 0 || coeffs_[m].is_zero()) continue;
      acc = acc + coeffs_[m] * g[n - m] * w;
    }
    g[n] = acc / Rat(static_cast<long long>(n));
  }
  return PSeries(std::move(g), order());
}

}  // namespace wdvv
