#include <doctest.h>

#include "wdvv/flatchart.hpp"
#include "wdvv/superpotential.hpp"

using namespace wdvv;

namespace {
FlatChart chart(unsigned N) {
  WaterBag w = WaterBag::make(WaterBagSpecData{N, 1, Flavor::Generic, {}});
  return flat_map(w);
}
}  // namespace

TEST_CASE("low rank flat charts are the identity up to relabeling") {
  FlatChart f1 = chart(1);
  CHECK(f1.t_of_s[0] == MultiPoly::var("s1"));

  FlatChart f2 = chart(2);
  CHECK(f2.t_of_s[0] == MultiPoly::var("s2"));
  CHECK(f2.t_of_s[1] == MultiPoly::var("s1"));
}

TEST_CASE("rank three picks up the first nonlinear correction") {
  FlatChart f = chart(3);
  MultiPoly s1 = MultiPoly::var("s1");
  CHECK(f.t_of_s[0] == MultiPoly::var("s3") - s1 * s1 / Rat(8));
  CHECK(f.t_of_s[1] == MultiPoly::var("s2"));
  CHECK(f.t_of_s[2] == s1);
  MultiPoly t3 = MultiPoly::var("t3");
  CHECK(f.s_of_t[2] == MultiPoly::var("t1") + t3 * t3 / Rat(8));
}

TEST_CASE("the two directions compose to the identity") {
  for (unsigned N : {1u, 2u, 3u, 4u, 5u}) {
    FlatChart f = chart(N);
    for (unsigned i = 1; i <= N; ++i) {
      std::map<std::string, MultiPoly> sub;
      for (unsigned j = 1; j <= N; ++j)
        sub[WaterBag::t_name(j)] = f.t_of_s[j - 1];
      MultiPoly back = f.s_of_t[i - 1].substitute(sub);
      CHECK(back == MultiPoly::var(WaterBag::s_name(i)));
    }
  }
}

TEST_CASE("jacobian matches derivatives of the forward map") {
  FlatChart f = chart(4);
  std::map<std::string, MultiPoly> to_t;
  for (unsigned j = 1; j <= 4; ++j) to_t[WaterBag::s_name(j)] = f.s_of_t[j - 1];
  // t_of_s(s(t)) = t, so sum_m (d t_j / d s_m)|_{s(t)} * ds_m/dt^i = delta_{ij}
  for (unsigned i = 1; i <= 4; ++i) {
    for (unsigned j = 1; j <= 4; ++j) {
      MultiPoly acc;
      for (unsigned m = 1; m <= 4; ++m) {
        MultiPoly dt = f.t_of_s[j - 1].derivative(WaterBag::s_name(m)).substitute(to_t);
        acc = acc + dt * f.ds_dt[m - 1][i - 1];
      }
      CHECK(acc == (i == j ? MultiPoly(Rat(1)) : MultiPoly()));
    }
  }
}

TEST_CASE("grading of flat coordinates is homogeneous") {
  WaterBag w = WaterBag::make(WaterBagSpecData{4, 0, Flavor::Generic, {}});
  FlatChart f = flat_map(w);
  auto weights = w.grading_weights();
  for (unsigned i = 1; i <= 4; ++i) {
    auto d = f.t_of_s[i - 1].homogeneous_degree(weights);
    REQUIRE(d.has_value());
    CHECK(*d == Rat(4 + 2 - i));
  }
}
