#pragma once

#include <vector>

#include "wdvv/multipoly.hpp"

namespace wdvv {

// Univariate polynomial in the distinguished symbol p, with MultiPoly
// coefficients in the ambient parameters. coeffs[d] multiplies p^d; the
// leading coefficient is kept nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(MultiPoly c) { coeffs_.push_back(std::move(c)); trim(); }
  explicit UPoly(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly x(unsigned pow = 1);                   // p^pow
  static UPoly linear(const MultiPoly& root);         // p - root

  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const MultiPoly& coeff(unsigned d) const;
  MultiPoly lead() const { return coeffs_.empty() ? MultiPoly() : coeffs_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const MultiPoly& c) const;
  UPoly operator*(const Rat& c) const;
  bool operator==(const UPoly& o) const;

  UPoly pow(unsigned e) const;
  UPoly derivative() const;                 // d/dp
  UPoly derivative_param(const std::string& name) const;  // coefficient-wise
  MultiPoly eval(const MultiPoly& point) const;            // p -> point, Horner
  // divide by (p - root): {quotient, remainder}; remainder is a MultiPoly
  std::pair<UPoly, MultiPoly> div_linear(const MultiPoly& root) const;
  UPoly divide_linear_exact(const MultiPoly& root) const;
  // coefficients reversed: x^deg * f(1/x), as a vector for series work
  std::vector<MultiPoly> reversed() const;
  // expand as MultiPoly with `name` standing for p
  MultiPoly expand(const std::string& name) const;

  std::string str(const std::string& name = "p") const;

 private:
  std::vector<MultiPoly> coeffs_;
  void trim();
};

inline UPoly operator*(const MultiPoly& c, const UPoly& f) { return f * c; }

}  // namespace wdvv
