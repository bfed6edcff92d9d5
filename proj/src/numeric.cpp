#include "pgcache/numeric.hpp"

namespace pgcache {

std::string to_decimal(const Rational& v, int places) {
    const bool negative = v < 0;
    Rational a = negative ? -v : v;
    BigInt num = numerator(a), den = denominator(a);
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    BigInt scaled = num * scale / den;
    BigInt rem = num * scale % den;
    // round half to even
    BigInt twice = rem * 2;
    if (twice > den || (twice == den && (scaled % 2) != 0)) ++scaled;

    std::string digits = scaled.str();
    while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
    std::string out = digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    if (negative && scaled != 0) out.insert(out.begin(), '-');
    return out;
}

std::string render_ratio(const Rational& v) {
    if (is_integral(v)) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str() + " (~" + to_decimal(v, 4) + ")";
}

}  // namespace pgcache
