#pragma once

#include <vector>

#include "wdvv/superpotential.hpp"

namespace wdvv {

// Flat coordinates for the polynomial sector. With the inverse expansion
// p(k) = k + sum_{n>=1} c_n k^{-n} of k = lambda_+^{1/(N+1)}, the chart is
// t^i = -(N+1) c_{N+1-i}; both directions of the map are polynomial and
// triangular. Rational-block x's and the b's are already flat.
struct FlatChart {
  unsigned N = 0;
  std::vector<MultiPoly> t_of_s;  // t^i in the s variables, index i-1
  std::vector<MultiPoly> s_of_t;  // s_i in the t variables, index i-1
  // ds_dt[i-1][j-1] = d s_i / d t^j, expressed in the t variables
  std::vector<std::vector<MultiPoly>> ds_dt;
};

FlatChart flat_map(const WaterBag& w);

}  // namespace wdvv
