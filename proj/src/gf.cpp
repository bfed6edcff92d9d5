#include "pgcache/gf.hpp"

#include "pgcache/errors.hpp"

#include <algorithm>

namespace pgcache {
namespace {

constexpr unsigned kMaxQ = 1u << 16;
constexpr unsigned kTableLimit = 1024;  // q*q uint16 tables up to 2 MiB

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// polynomials over F_p as coefficient vectors, c[0] = constant term
using Poly = std::vector<unsigned>;

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned lead = a.back();
        if (lead != 0) {
            size_t shift = a.size() - 1 - dm;
            for (size_t i = 0; i <= dm; ++i) {
                unsigned sub = (lead * m[i]) % p;
                unsigned& c = a[shift + i];
                c = (c + p - sub) % p;  // m is monic, so this cancels the lead
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

unsigned poly_to_label(const Poly& a, unsigned p) {
    unsigned v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly label_to_poly(unsigned v, unsigned p, unsigned e) {
    Poly a(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        a[i] = v % p;
        v /= p;
    }
    return a;
}

// trial division by every monic polynomial of degree 1..deg/2
bool is_irreducible(const Poly& m, unsigned p) {
    const unsigned deg = static_cast<unsigned>(m.size()) - 1;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;  // p^d monic candidates
        for (unsigned v = 0; v < count; ++v) {
            Poly div = label_to_poly(v, p, d);
            div.push_back(1);  // monic
            // remainder of m by div
            Poly r = m;
            while (r.size() >= div.size()) {
                unsigned lead = r.back();
                if (lead != 0) {
                    size_t shift = r.size() - div.size();
                    for (size_t i = 0; i < div.size(); ++i) {
                        unsigned sub = (lead * div[i]) % p;
                        unsigned& c = r[shift + i];
                        c = (c + p - sub) % p;
                    }
                }
                r.pop_back();
            }
            if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; })) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
    if (q < 2 || q > kMaxQ) throw ArgumentError("field order must be in [2, 2^16]: q=" + std::to_string(q));
    unsigned p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    unsigned e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1 || !is_prime(p)) throw ArgumentError("q must be a prime power: q=" + std::to_string(q));
    p_ = p;
    e_ = e;

    if (e_ > 1) {
        // smallest monic irreducible of degree e, scanning lower coefficients
        // in increasing integer encoding
        unsigned count = 1;
        for (unsigned i = 0; i < e_; ++i) count *= p_;
        for (unsigned v = 0; v < count; ++v) {
            Poly cand = label_to_poly(v, p_, e_);
            cand.push_back(1);
            if (is_irreducible(cand, p_)) {
                modulus_ = cand;
                break;
            }
        }
        if (modulus_.empty()) throw ArgumentError("no irreducible modulus found (q=" + std::to_string(q) + ")");
    }

    if (q_ <= kTableLimit) {
        tabled_ = true;
        add_tab_.resize(size_t(q_) * q_);
        mul_tab_.resize(size_t(q_) * q_);
        neg_tab_.resize(q_);
        inv_tab_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            neg_tab_[a] = static_cast<uint16_t>(neg_slow(a));
            for (unsigned b = 0; b < q_; ++b) {
                add_tab_[size_t(a) * q_ + b] = static_cast<uint16_t>(add_slow(a, b));
                unsigned m = mul_slow(a, b);
                mul_tab_[size_t(a) * q_ + b] = static_cast<uint16_t>(m);
                if (m == 1) inv_tab_[a] = static_cast<uint16_t>(b);
            }
        }
    }

    if (q_ <= 64) verify_field_axioms();
}

unsigned FiniteField::add_slow(unsigned a, unsigned b) const {
    if (e_ == 1) return (a + b) % p_;
    unsigned r = 0, mul = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

unsigned FiniteField::neg_slow(unsigned a) const {
    if (e_ == 1) return (p_ - a % p_) % p_;
    unsigned r = 0, mul = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

unsigned FiniteField::mul_slow(unsigned a, unsigned b) const {
    if (e_ == 1) return (a * b) % p_;
    Poly prod = poly_mul(label_to_poly(a, p_, e_), label_to_poly(b, p_, e_), p_);
    return poly_to_label(poly_mod(std::move(prod), modulus_, p_), p_);
}

unsigned FiniteField::inv_slow(unsigned a) const {
    for (unsigned b = 1; b < q_; ++b)
        if (mul_slow(a, b) == 1) return b;
    throw ArgumentError("element has no inverse: " + std::to_string(a));
}

unsigned FiniteField::add(unsigned a, unsigned b) const {
    return tabled_ ? add_tab_[size_t(a) * q_ + b] : add_slow(a, b);
}

unsigned FiniteField::neg(unsigned a) const { return tabled_ ? neg_tab_[a] : neg_slow(a); }

unsigned FiniteField::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned FiniteField::mul(unsigned a, unsigned b) const {
    return tabled_ ? mul_tab_[size_t(a) * q_ + b] : mul_slow(a, b);
}

unsigned FiniteField::inv(unsigned a) const {
    if (a == 0) throw ArgumentError("inverse of zero");
    if (tabled_) return inv_tab_[a];
    return inv_slow(a);
}

void FiniteField::verify_field_axioms() const {
    for (unsigned a = 1; a < q_; ++a) {
        unsigned i = inv(a);
        if (i == 0 || mul(a, i) != 1)
            throw ArgumentError("field construction broken: no inverse for " + std::to_string(a));
    }
}

FieldPtr make_field(unsigned q) { return std::make_shared<const FiniteField>(q); }

}  // namespace pgcache
