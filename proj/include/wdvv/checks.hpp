#pragma once

#include <cstdint>
#include <random>

#include "wdvv/frobenius.hpp"
#include "wdvv/prepotential.hpp"

namespace wdvv {

struct CheckReport {
  std::string check;
  bool pass = false;
  std::vector<std::string> witnesses;
};

// Rational sample point for all flat coordinates and deformation parameters:
// every value nonzero, log positions pairwise distinct, parameters nonzero,
// so eta stays invertible and no pole locus is hit.
std::map<std::string, Rat> sample_point(const WaterBag& w, std::mt19937_64& rng);

// Structure functions with the first index raised by the inverse flat metric,
// comp[g][a][b] = eta^{gd} c_{dab}. Raising a b-index divides by the matching
// parameter, which is exact on every entry.
struct RaisedC {
  std::vector<Coord> coords;
  std::vector<std::vector<std::vector<PoleExpr>>> comp;
};
RaisedC raise_first_index(const CTensor& c_flat, const WaterBag& w);

// Associativity of the flat-chart product at seeded rational points: for all
// pairs of multiplication matrices, C_a eta^{-1} C_b = C_b eta^{-1} C_a
// exactly over Q.
CheckReport wdvv_check(const WaterBag& w, const CTensor& c_flat,
                       unsigned n_points, uint64_t seed);

// The first flat coordinate is the unity direction: c(t1, ., .) == eta(., .)
// as symbolic entries.
CheckReport unity_check(const WaterBag& w, const CTensor& c_flat);

// Termwise weighted degrees 2N+4 for F0 and N+3 for each F1 cofactor, log
// coefficients k_i k_j / 4 per unordered pair, the integer Euler operator
// reproducing (2N+4) F on the polynomial part, and the log-sector defect
// 2 sum gamma_ij (b_i - b_j)^2 at most quadratic in the flat coordinates.
CheckReport homogeneity_check(const WaterBag& w, const Prepotential& P);

// Contravariant intersection form g^{ij} = E^l c_l^{ij} with both indices
// raised by eta^{-1}.
struct IntersectionForm {
  std::vector<Coord> coords;
  std::vector<std::vector<PoleExpr>> g;
};
IntersectionForm intersection_form(const WaterBag& w, const CTensor& c_flat);

// The five symbolic identities tying e = d/dt1, the Euler field E, eta^{-1}
// and g^{-1}: [e,E] = e; L^ext_E g = (d-1) g; L^ext_E eta^{-1} =
// (d-2) eta^{-1}; L_e g = eta^{-1}; L_e eta^{-1} = 0, with d = (N-1)/(N+1)
// and L^ext extending the Lie derivative by sum_r k_r d/dk_r on the Euler
// field only.
CheckReport intersection_form_check(const WaterBag& w, const CTensor& c_flat);

// Raised structure functions are exactly linear in every parameter; the
// pieces of c = c0 + sum_i k_i c_i satisfy all pairwise mixed associativity
// conditions x o_i (y o_j z) + x o_j (y o_i z) = (x o_i y) o_j z +
// (x o_j y) o_i z at seeded rational points, pairs (0,i) and (i,i) included.
CheckReport k_decomposition_check(const WaterBag& w, const CTensor& c_flat,
                                  unsigned n_points, uint64_t seed);

// Product-preservation property of the multiplication: L_{X o Y}(o) =
// X o L_Y(o) + Y o L_X(o) for coordinate fields X, Y, from symbolic
// derivatives of the raised structure functions, at seeded rational points.
CheckReport fmanifold_check(const WaterBag& w, const CTensor& c_flat,
                            unsigned n_points, uint64_t seed);

// Fundamental system of deformed flat sections: level 0 seeds psi = each flat
// coordinate, level n solves d_i d_j psi = -c_ij^l d_l psi_prev by monomial
// matching. Requires at most one logarithm so that all sections stay
// polynomial; throws std::domain_error otherwise or on integrability failure.
std::vector<std::vector<MultiPoly>> deformed_sections(const WaterBag& w,
                                                      const CTensor& c_flat,
                                                      unsigned n_max);

}  // namespace wdvv
