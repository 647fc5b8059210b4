#pragma once

#include <string>
#include <vector>

#include "wdvv/residues.hpp"
#include "wdvv/upoly.hpp"

namespace wdvv {

enum class Flavor { Generic, BN, Rational };

struct RationalPole {
  unsigned L = 1;
};

struct WaterBagSpecData {
  unsigned N = 1;
  unsigned M = 0;
  Flavor flavor = Flavor::Generic;
  std::vector<RationalPole> rational;
};

enum class CoordKind { S, T, B, X };

struct Coord {
  CoordKind kind;
  unsigned i = 0;  // s_i / t_i index, b_alpha index, or rational pole index
  unsigned l = 0;  // component within a rational pole block
  std::string name;
};

// Superpotential lambda = p^{N+1} + s_1 p^{N-1} + ... + s_N
//                        + sum_j k_j log(p - b_j)
//                        + sum_i sum_{l<=L_i} v_{i,l} / (p - a_i)^l
// The rational tail is parametrized by flat block coordinates x_{i,l}: the
// pole location is a_i = x_{i,L_i+1}/L_i and the v_{i,l} are polynomials in
// the x's. The bn flavor models the even sector of a degree-2N+2 potential:
// it is stored as the underlying generic potential of rank 2N+1 with 2M
// logarithm terms; see bn_reduce for the restriction maps.
class WaterBag {
 public:
  static WaterBag make(const WaterBagSpecData& spec);

  const WaterBagSpecData& spec() const { return spec_; }
  // rank and pole count of the chart the object actually works in
  unsigned N() const { return n_; }
  unsigned M() const { return m_; }
  Flavor flavor() const { return spec_.flavor; }
  const std::vector<RationalPole>& rational() const { return spec_.rational; }

  static std::string s_name(unsigned i) { return "s" + std::to_string(i); }
  static std::string t_name(unsigned i) { return "t" + std::to_string(i); }
  static std::string b_name(unsigned j) { return "b" + std::to_string(j); }
  static std::string k_name(unsigned j) { return "k" + std::to_string(j); }
  static std::string x_name(unsigned pole, unsigned l) {
    return "x" + std::to_string(pole) + "_" + std::to_string(l);
  }

  UPoly lambda_plus() const;
  UPoly lambda_plus_prime() const;

  // rational-tail data in the x parametrization (1-based pole index)
  MultiPoly a_loc(unsigned i) const;
  // v_{i,1..L_i} as polynomials in the x block
  std::vector<MultiPoly> v_of_x(unsigned i) const;

  // nu = lambda' * prod_j (p-b_j) * prod_i (p-a_i)^{L_i+1}, expanded
  UPoly nu() const;
  // factored special values of nu, with expansion cross-checked
  FactoredValue nu_at_b(unsigned alpha) const;
  FactoredValue nu_at_a(unsigned i) const;

  // d(lambda)/d(coordinate) as a tracked rational function of p
  RationalFunction dlambda(const Coord& c) const;
  // 1/lambda' = prod_j (p-b_j) prod_i (p-a_i)^{L_i+1} / nu, as factor lists
  UPoly inv_lambda_prime_numerator() const;

  // raw chart: s_1..s_N, x blocks, b_1..b_M
  std::vector<Coord> coords_raw() const;
  // flat chart: t_1..t_N, x blocks, b_1..b_M
  std::vector<Coord> coords_flat() const;

  // integer-normalized weights: deg s_i = i+1, deg t_i = N+2-i, deg b = 1,
  // deg k = N+1 (generic flavor)
  std::map<std::string, Rat> grading_weights() const;

 private:
  WaterBagSpecData spec_;
  unsigned n_ = 1;  // working rank (2*N+1 for bn)
  unsigned m_ = 0;  // working pole count (2*M for bn)
};

}  // namespace wdvv
