#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pgcache {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline Rational pow_big(const BigInt& base, int exp) {
    if (exp >= 0) return Rational(pow_big(base, static_cast<unsigned>(exp)));
    return Rational(1) / Rational(pow_big(base, static_cast<unsigned>(-exp)));
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

// ceil(a/b) for b > 0
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && a > 0) ++q;
    return q;
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

// Renders an exact rational with the given number of decimal places,
// rounding ties to even.
std::string to_decimal(const Rational& v, int places);

// "p/q (~x.xxxx)" when non-integral, plain integer otherwise.
std::string render_ratio(const Rational& v);

// |a - b| <= tol, exact rational comparison
inline bool within(const Rational& a, const Rational& b, const Rational& tol) {
    Rational d = a - b;
    if (d < 0) d = -d;
    return d <= tol;
}

}  // namespace pgcache
