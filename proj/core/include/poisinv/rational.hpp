#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "poisinv/errors.hpp"

namespace poisinv {

// Exact rational scalars. cpp_rational keeps gcd(num, den) = 1 and den > 0
// canonically, which is exactly the invariant the rest of the library assumes.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

// n/d for arbitrary signs; the backend constructor insists on d > 0
inline Rational make_rational(BigInt n, BigInt d) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) { n = -n; d = -d; }
    return Rational(std::move(n), std::move(d));
}

// "p" for integers, "p/q" otherwise; the sign sits on the numerator.
inline std::string rat_str(const Rational& q) { return q.str(); }

}  // namespace poisinv
