#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace excov {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Int128 = boost::multiprecision::int128_t;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

Rational dot(const RatVec& a, const RatVec& b);
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& c, const RatVec& v);

// Exact Gauss-Jordan inverse; throws std::invalid_argument on singular input.
RatMat mat_inverse(const RatMat& m);
// Solves a x = b exactly; throws std::invalid_argument if a is singular.
RatVec solve_linear(RatMat a, RatVec b);

inline Int pow2(unsigned k) {
  Int one = 1;
  return one << k;
}

}  // namespace excov
