#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdvv/frobenius.hpp"

namespace wdvv {

// F = F0(t) + sum_i k_i F1_i(t, b_i)
//       + sum_{i<j} gamma_ij (b_i - b_j)^2 log(b_i - b_j)^2
// with gamma_ij = k_i k_j / 4 for an unordered pair (1/8 per ordered pair).
struct Prepotential {
  std::vector<Coord> coords;  // flat chart the third derivatives act on
  MultiPoly F_poly;           // full polynomial part, k symbols included
  MultiPoly F0;
  std::map<unsigned, MultiPoly> F1;  // index of k_i -> cofactor
  std::map<std::pair<unsigned, unsigned>, MultiPoly> gamma;  // {i<j} -> coeff
};

// Integrates a flat-chart structure tensor to its prepotential. The pole part
// of every entry must follow the third-derivative pattern of the log block
// (d^3/dx^3 of x^2 log x^2 = 4/x); the polynomial part is integrated by
// monomial matching with cross-entry consistency checks, in the gauge with no
// monomials of degree <= 2. Throws std::domain_error on any inconsistency.
Prepotential integrate_F(const WaterBag& w, const CTensor& c_flat);

// Rebuilds every third derivative of P (log block included) and compares with
// c_flat entry by entry; returns the offending index triple or empty string.
std::string third_derivative_mismatch(const Prepotential& P,
                                      const CTensor& c_flat);

}  // namespace wdvv
