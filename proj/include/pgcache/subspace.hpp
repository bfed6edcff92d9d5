#pragma once

#include "pgcache/gf.hpp"
#include "pgcache/numeric.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pgcache {

constexpr uint64_t kDefaultEnumCap = 2'000'000;

/// A subspace of F_q^k held as its reduced row echelon basis (pivots
/// normalised to 1, pivot columns strictly increasing).  The RREF basis is a
/// canonical representative: two Subspace values compare equal iff they are
/// the same point set.  The zero subspace has an empty basis.
class Subspace {
public:
    Subspace(FieldPtr field, unsigned ambient_dim);  // zero subspace

    /// Canonicalises the span of arbitrary generating vectors.
    static Subspace span(FieldPtr field, unsigned ambient_dim,
                         const std::vector<std::vector<unsigned>>& generators);

    /// Trusted constructor for rows already known to be in RREF.
    static Subspace from_rref(FieldPtr field, unsigned ambient_dim, unsigned dim,
                              std::vector<uint16_t> rows);

    unsigned ambient_dim() const { return ambient_; }
    unsigned dim() const { return dim_; }
    const FieldPtr& field() const { return field_; }

    /// Row-major dim x ambient matrix.
    const std::vector<uint16_t>& basis() const { return rows_; }
    std::span<const uint16_t> row(unsigned i) const {
        return {rows_.data() + size_t(i) * ambient_, ambient_};
    }

    bool contains_vector(std::span<const uint16_t> v) const;
    bool contains(const Subspace& inner) const;

    bool is_zero() const { return dim_ == 0; }

    /// Canonical text form: rows of digit strings joined by '|', e.g. "001|010".
    std::string label() const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && dim_ == o.dim_ && rows_ == o.rows_;
    }
    /// Orders by dimension, then lexicographically on the flattened RREF
    /// entries (the enumeration order used throughout).
    std::strong_ordering operator<=>(const Subspace& o) const;

    size_t hash() const;

private:
    FieldPtr field_;
    unsigned ambient_ = 0;
    unsigned dim_ = 0;
    std::vector<uint16_t> rows_;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Subspace sum a + b (direct sum iff dim(a)+dim(b) = dim of the result).
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Rank of the stacked bases; dim(a + b) without building the sum.
unsigned sum_dim(const std::vector<const Subspace*>& parts);

/// Exact Gaussian binomial [k m]_q; [k 0]_q = 1.
BigInt gaussian_binomial(unsigned k, unsigned m, const BigInt& q);

/// theta(k) = (q^k - 1)/(q - 1), the number of 1-dim subspaces of F_q^k.
BigInt theta(unsigned k, const BigInt& q);

/// The finite envelopes on Gaussian binomials and their ratios:
///   q^{(a-b)b}       <= [a b]         <= q^{(a-b+1)b}
///   q^{(a-f-1)b}     <= [a b]/[f b]   <= q^{(a-f+1)b}      (b <= f <= a)
///   q^{(a-f-b-1)dlt} <= [a b]/[a f]   <= q^{(a-f-b+1)dlt}  (f <= b <= a)
/// with dlt = max(b,f) - min(b,f).  All six values are exact rationals
/// (negative exponents occur for degenerate corners).
struct GbEnvelopes {
    Rational lower_gb, upper_gb;        // brackets [a b]
    Rational lower_ratio_top, upper_ratio_top;    // brackets [a b]/[f b]
    Rational lower_ratio_bottom, upper_ratio_bottom;  // brackets [a b]/[a f]
};
GbEnvelopes gb_bounds(unsigned a, unsigned b, unsigned f, unsigned q);

/// Every d-dim subspace of F_q^k exactly once, sorted lexicographically on the
/// flattened RREF basis.  Throws ResourceError when [k d]_q exceeds the cap.
std::vector<Subspace> enumerate_subspaces(unsigned k, unsigned d, const FieldPtr& field,
                                          uint64_t cap = kDefaultEnumCap);

/// Every d-dim subspace of x (as ambient-canonical subspaces), same order.
std::vector<Subspace> subspaces_of(const Subspace& x, unsigned d,
                                   uint64_t cap = kDefaultEnumCap);

}  // namespace pgcache
