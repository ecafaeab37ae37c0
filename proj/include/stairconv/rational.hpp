#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "stairconv/geometry.hpp"

namespace stairconv {

// Exact arithmetic for the stretched constructions. Coordinates of stretched
// grids span hundreds of digits, so every geometric decision on them is made
// in arbitrary-precision rationals; doubles appear only in the unit-cube frame.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalPoint = PointT<Rational>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

inline Point to_double_point(const RationalPoint& p) {
    Point out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = to_double(p[i]);
    return out;
}

inline RationalPoint to_rational_point(const Point& p) {
    RationalPoint out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = Rational(p[i]);
    return out;
}

inline BigInt int_pow(BigInt base, unsigned exp) {
    BigInt result = 1;
    while (exp) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

}  // namespace stairconv
