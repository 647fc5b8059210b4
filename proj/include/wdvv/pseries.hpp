#pragma once

#include <vector>

#include "wdvv/multipoly.hpp"
#include "wdvv/upoly.hpp"

namespace wdvv {

// Truncated power series in one formal variable with MultiPoly coefficients.
// A series of order n tracks coefficients of x^0..x^{n-1}; all binary
// operations require matching orders.
class PSeries {
 public:
  PSeries() = default;
  PSeries(std::vector<MultiPoly> coeffs, size_t order);
  static PSeries zero(size_t order) { return PSeries({}, order); }
  static PSeries one(size_t order);
  static PSeries x(size_t order);
  // series whose coefficients are the UPoly's, low degree first
  static PSeries from_coeffs_low_first(std::vector<MultiPoly> coeffs, size_t order);

  size_t order() const { return coeffs_.size(); }
  const MultiPoly& coeff(size_t n) const;
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  PSeries operator+(const PSeries& o) const;
  PSeries operator-(const PSeries& o) const;
  PSeries operator*(const PSeries& o) const;
  PSeries operator-() const;
  PSeries operator*(const MultiPoly& c) const;
  PSeries operator*(const Rat& c) const;
  bool operator==(const PSeries& o) const;

  PSeries shift_up(size_t k) const;   // multiply by x^k
  PSeries shift_down(size_t k) const; // divide by x^k; low coefficients must vanish

  // 1/f; requires the constant term to be a nonzero rational constant
  PSeries reciprocal() const;
  // f(g) with g(0) = 0
  PSeries compose(const PSeries& g) const;
  // compositional inverse: g with f(g(x)) = x; requires f(0) = 0 and the
  // linear coefficient a nonzero rational constant
  PSeries revert() const;
  // f^q for rational q; requires constant term exactly 1
  PSeries pow_rational(const Rat& q) const;

 private:
  std::vector<MultiPoly> coeffs_;
};

}  // namespace wdvv
