#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace wdvv {

// Exact rational scalar used throughout, normalized (coprime numerator and
// denominator, denominator > 0). Expression templates are disabled so that
// arithmetic results are plain values usable in containers and generic code.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline long double rat_to_ld(const Rat& r) {
  // convert_to<long double> on the normalized fraction keeps full 64-bit
  // mantissa precision for the magnitudes that appear here
  return r.template convert_to<long double>();
}

}  // namespace wdvv
