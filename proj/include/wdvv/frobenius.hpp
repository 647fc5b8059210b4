#pragma once

#include <array>
#include <map>
#include <vector>

#include "wdvv/flatchart.hpp"
#include "wdvv/poleexpr.hpp"
#include "wdvv/superpotential.hpp"

namespace wdvv {

struct Metric {
  std::vector<Coord> coords;
  std::vector<std::vector<PoleExpr>> g;

  const PoleExpr& at(size_t i, size_t j) const { return g[i][j]; }
};

struct CTensor {
  std::vector<Coord> coords;
  std::map<std::array<size_t, 3>, PoleExpr> entries;

  const PoleExpr& at(size_t i, size_t j, size_t l) const;
  void set(size_t i, size_t j, size_t l, PoleExpr e);
};

// minus the sum of residues of prod(dlambda_i) / lambda' dp over the critical
// points of lambda, computed through the residue at infinity and at the
// tracked finite poles
PoleExpr residue_pairing(const WaterBag& w, const std::vector<Coord>& fields);

// metric in the raw chart (s, x, b): series coefficients of 1/mu for the
// s-block, k_j delta for the b-block, constant blocks for the x sector
Metric metric_closed(const WaterBag& w);
// same entries from the residue oracle
Metric metric_oracle(const WaterBag& w);
// metric in the flat chart: constant antidiagonal t-block
Metric metric_closed_flat(const WaterBag& w);

// structure constants in the raw chart from the closed forms (generic and bn
// flavors)
CTensor c_closed(const WaterBag& w);
// structure constants from the residue oracle
CTensor c_oracle(const WaterBag& w);

// pull tensors from the raw chart to the flat chart through s = s(t)
Metric push_to_flat(const Metric& m, const WaterBag& w, const FlatChart& fc);
CTensor push_to_flat(const CTensor& c, const WaterBag& w, const FlatChart& fc);

// inverse flat metric as sparse data: constant t-block plus 1/k_j poles
struct InverseMetric {
  std::vector<Coord> coords;
  std::vector<std::vector<PoleExpr>> ginv;
};
InverseMetric metric_flat_inverse(const WaterBag& w);

}  // namespace wdvv
