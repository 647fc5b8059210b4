#include <doctest.h>

#include "wdvv/serialize.hpp"

using namespace wdvv;

namespace {

MultiPoly V(const std::string& n, unsigned e = 1) { return MultiPoly::var(n, e); }
MultiPoly Q(long long n, long long d = 1) { return MultiPoly(Rat(n) / Rat(d)); }

Prepotential build(const WaterBagSpecData& spec, WaterBag* out_w = nullptr) {
  WaterBag w = WaterBag::make(spec);
  FlatChart fc = flat_map(w);
  CTensor c = push_to_flat(c_closed(w), w, fc);
  if (out_w) *out_w = w;
  return integrate_F(w, c);
}

}  // namespace

TEST_CASE("polynomial json round-trips losslessly") {
  MultiPoly p = Q(-7, 3) * V("t1", 2) * V("b1") + Q(1) * V("k2", 5) +
                Q(22, 7) * V("t10");
  Json j = poly_to_json(p);
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(poly_to_json(MultiPoly())) == MultiPoly());
  // big coefficients stay exact through the decimal-string form
  Rat big = Rat(BigInt("123456789012345678901234567890"),
                BigInt("987654321098765432109876543211"));
  MultiPoly q = MultiPoly(big) * V("t1");
  CHECK(poly_from_json(poly_to_json(q)) == q);
}

TEST_CASE("superpotential spec json round-trips") {
  WaterBagSpecData s;
  s.N = 2;
  s.M = 3;
  s.flavor = Flavor::Rational;
  s.rational = {RationalPole{2}, RationalPole{1}};
  Json j = spec_to_json(s);
  WaterBagSpecData t = spec_from_json(j);
  CHECK(t.N == s.N);
  CHECK(t.M == s.M);
  CHECK(t.flavor == s.flavor);
  REQUIRE(t.rational.size() == 2);
  CHECK(t.rational[0].L == 2);
  CHECK(t.rational[1].L == 1);
  CHECK(spec_from_json(Json{{"N", 3}}).flavor == Flavor::Generic);
  CHECK_THROWS_AS(spec_from_json(Json{{"N", 1}, {"flavor", "weird"}}),
                  std::invalid_argument);
}

TEST_CASE("tensor dump carries pole pairs and stays deterministic") {
  WaterBag w = WaterBag::make({1, 2});
  FlatChart fc = flat_map(w);
  CTensor c = push_to_flat(c_closed(w), w, fc);
  Json j = tensor_to_json(c, w.coords_flat());
  CHECK(j.at("chart") == Json::array({"t1", "b1", "b2"}));
  // c(b1, b1, b2) carries the pole at b1 - b2
  bool found_pair = false;
  for (const auto& [key, entry] : j.at("entries").items()) {
    if (!entry.contains("poles")) continue;
    for (const auto& p : entry.at("poles")) {
      if (p.contains("pair")) {
        found_pair = true;
        CHECK(p.at("exp") == 1);
      }
    }
  }
  CHECK(found_pair);
  CHECK(tensor_to_json(c, w.coords_flat()).dump() == j.dump());
}

TEST_CASE("metric dump round-trips entries through the poly form") {
  WaterBag w = WaterBag::make({2, 1});
  FlatChart fc = flat_map(w);
  Metric m = push_to_flat(metric_closed(w), w, fc);
  Json j = metric_to_json(m, w.coords_flat());
  // flat metric is polynomial: every entry must round-trip exactly
  for (const auto& [key, entry] : j.at("entries").items()) {
    CHECK(!entry.contains("poles"));
    size_t comma = key.find(',');
    size_t a = std::stoul(key.substr(0, comma));
    size_t b = std::stoul(key.substr(comma + 1));
    CHECK(poly_from_json(entry.at("poly")) == m.at(a, b).poly());
  }
}

TEST_CASE("prepotential json has the split parts and log pairs") {
  Prepotential P = build({1, 2});
  Json j = prepotential_to_json(P);
  CHECK(poly_from_json(j.at("F0")) == P.F0);
  CHECK(poly_from_json(j.at("F1").at("1")) == P.F1.at(1));
  CHECK(poly_from_json(j.at("F1").at("2")) == P.F1.at(2));
  REQUIRE(j.at("log").size() == 1);
  CHECK(j.at("log")[0].at("pair") == Json::array({1, 2}));
  CHECK(poly_from_json(j.at("log")[0].at("coeff")) ==
        Q(1, 4) * V("k1") * V("k2"));
}

TEST_CASE("latex display groups the k cofactor and shows every monomial") {
  Prepotential P = build({2, 1});
  std::string tex = prepotential_latex(P);
  CHECK(tex.find("k_{1} \\left(") != std::string::npos);
  for (const char* mono :
       {"t_{1}^{2}t_{2}", "b_{1}^{2}t_{1}", "t_{2}^{4}", "b_{1}t_{2}^{2}",
        "b_{1}^{3}t_{2}", "b_{1}^{5}"})
    CHECK(tex.find(mono) != std::string::npos);

  Prepotential L = build({1, 2});
  std::string ltex = prepotential_latex(L);
  CHECK(ltex.find("(b_{1} - b_{2})^{2} \\log (b_{1} - b_{2})^{2}") !=
        std::string::npos);
}

TEST_CASE("text display prints the weighted degree of each block") {
  WaterBag w;
  Prepotential P = build({2, 1}, &w);
  std::string txt = prepotential_text(P, w.grading_weights());
  // N=2: F0 has degree 2N+4 = 8, the k cofactor has degree N+3 = 5
  CHECK(txt.find("F0  [degree 8]") != std::string::npos);
  CHECK(txt.find("F1[1]  [degree 5]") != std::string::npos);
}

TEST_CASE("report json carries the full outcome") {
  CheckReport r{"wdvv", true, {}};
  Json j = check_to_json(r);
  CHECK(j.at("status") == "pass");
  NumericReport n{"numeric wdvv", "t1 = 1", 3e-12L, 1e-9L, true};
  Json jn = numeric_to_json(n);
  CHECK(jn.at("pass") == true);
  CHECK(jn.at("max_residual").get<double>() == doctest::Approx(3e-12));
  ExampleResult e{"case", "exact-match", true, "detail"};
  CHECK(example_to_json(e).at("status") == "exact-match");
}
