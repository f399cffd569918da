#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "turanlab/errors.hpp"

namespace turanlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        num /= i + 1; // exact: product of j consecutive integers is divisible by j!
    }
    return num;
}

inline BigInt int_pow(BigInt base, int exp) {
    if (exp < 0) throw InvalidArgument("int_pow: negative exponent");
    BigInt out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

/// "p/q" in lowest terms, or just "p" when q == 1.
inline std::string to_fraction_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline double to_double(const Rational& x) {
    return static_cast<double>(x);
}

} // namespace turanlab
