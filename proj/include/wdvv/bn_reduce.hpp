#pragma once

#include "wdvv/checks.hpp"

namespace wdvv {

// Even-sector restriction of the doubled water bag. The ambient object is the
// rank-2N+1 potential with 2M logarithms; the chart splits each log pair into
// bt_i = b_i and dt_i = b_i + b_{i+M}, and the locus is dt = 0 together with
// t^r = 0 for even r and k_{i+M} = k_i. Tangent fields are the odd-index
// d/dt^r and d/d(bt_i) = d/db_i - d/db_{i+M}.
struct BnRestricted {
  std::vector<Coord> coords;  // odd t's, then bt_1..bt_M (named b1..bM)
  std::vector<std::vector<PoleExpr>> eta;       // restricted metric
  std::map<std::array<size_t, 3>, PoleExpr> c;  // restricted lowered c, sorted keys
};

BnRestricted bn_restrict(unsigned N, unsigned M);

// Verifies the restriction: every raised component mixing tangent inputs with
// a normal output vanishes on the locus (six index families), the restricted
// metric has the closed form (2 k_i on the bt-block, -1/(2N+2) antidiagonal on
// the odd t-block), and the restricted tensor passes the associativity check
// at seeded rational points.
CheckReport bn_restriction_check(unsigned N, unsigned M, unsigned n_points,
                                 uint64_t seed);

}  // namespace wdvv
