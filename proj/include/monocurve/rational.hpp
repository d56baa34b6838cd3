#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monocurve {

// Arbitrary-precision rational coefficients. Family binomials only ever need
// +/-1, but Bareiss elimination and division quotients need exact rationals.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string rational_to_string(const Rational& q) {
    return q.str();
}

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

} // namespace monocurve
