#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperchow {

// Arbitrary-precision exact arithmetic. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division: largest q with q*b <= a (b != 0).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Remainder in [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) {
    Int r = a - floor_div(a, b) * b;
    return r;
}

// Division rounded to nearest (ties toward zero); keeps remainders small
// during Smith reduction.
inline Int round_div(const Int& a, const Int& b) {
    Int q = floor_div(a, b);
    Int r = a - q * b;
    if (2 * r > abs(b)) ++q;
    return q;
}

inline Int rat_floor(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

// Fractional part in [0,1).
inline Rat rat_frac(const Rat& q) {
    return q - Rat(rat_floor(q));
}

}  // namespace hyperchow
