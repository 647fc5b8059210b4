#pragma once

#include <json.hpp>

#include "wdvv/bn_reduce.hpp"
#include "wdvv/checks.hpp"
#include "wdvv/flatchart.hpp"
#include "wdvv/numeric.hpp"
#include "wdvv/prepotential.hpp"
#include "wdvv/reference.hpp"

namespace wdvv {

// insertion-ordered JSON keeps every emission byte-deterministic
using Json = nlohmann::ordered_json;

// canonical polynomial form: {"vars": [...], "terms": [{"exp": [...],
// "num": "...", "den": "..."}]}, integers as decimal strings, terms in the
// exponent-map order (lexicographic in the exponent vectors)
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json spec_to_json(const WaterBagSpecData& s);
WaterBagSpecData spec_from_json(const Json& j);

// entry maps keyed by sorted index tuples; pole terms carry the b-pair
Json metric_to_json(const Metric& m, const std::vector<Coord>& coords);
Json tensor_to_json(const CTensor& c, const std::vector<Coord>& coords);
Json prepotential_to_json(const Prepotential& P);

Json check_to_json(const CheckReport& r);
Json numeric_to_json(const NumericReport& r);
Json example_to_json(const ExampleResult& r);

// display-style LaTeX: polynomial part, k_i-grouped linear part, log part
std::string prepotential_latex(const Prepotential& P);
// plain text with the weighted degree of each homogeneous block
std::string prepotential_text(const Prepotential& P,
                              const std::map<std::string, Rat>& weights);

}  // namespace wdvv
