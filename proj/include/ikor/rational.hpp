#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ikor {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
    using boost::multiprecision::gcd;
    return gcd(a, b);
}

inline Int int_lcm(Int a, Int b) {
    using boost::multiprecision::lcm;
    return lcm(a, b);
}

/// gcd on Q: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d), non-negative.
inline Rational rat_gcd(const Rational& x, const Rational& y) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (x == 0) return y < 0 ? Rational(-y) : y;
    if (y == 0) return x < 0 ? Rational(-x) : x;
    Int n = int_gcd(numerator(x), numerator(y));
    Int d = int_lcm(denominator(x), denominator(y));
    if (n < 0) n = -n;
    return Rational(n, d);
}

inline Rational rat_pow(const Rational& x, long k) {
    if (k == 0) return Rational(1);
    if (x == 0) {
        if (k < 0) throw std::domain_error("rat_pow: zero to negative power");
        return Rational(0);
    }
    Rational base = k > 0 ? x : Rational(1) / x;
    unsigned long n = static_cast<unsigned long>(k > 0 ? k : -k);
    Rational r(1);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline std::string rat_str(const Rational& x) { return x.str(); }

}  // namespace ikor
