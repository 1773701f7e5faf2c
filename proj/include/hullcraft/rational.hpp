#ifndef HULLCRAFT_RATIONAL_HPP
#define HULLCRAFT_RATIONAL_HPP

#include <boost/rational.hpp>

namespace hullcraft {

/// Exact rationals for the theorem bounds (dimensions are compared against
/// ceil of these values).
using Rational = boost::rational<long long>;

inline long long rational_ceil(const Rational& r) {
    const long long n = r.numerator(), d = r.denominator(); // d > 0
    if (n >= 0) return (n + d - 1) / d;
    return -((-n) / d);
}

inline long long rational_floor(const Rational& r) {
    const long long n = r.numerator(), d = r.denominator();
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

} // namespace hullcraft

#endif
