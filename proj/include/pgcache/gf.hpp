#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace pgcache {

/// Arithmetic in GF(q), q = p^e.  Elements are labelled 0..q-1; for e > 1 the
/// label's base-p digits are the coefficients of the residue polynomial
/// (constant term least significant).  The modulus is the lexicographically
/// smallest monic irreducible of degree e over F_p, found by deterministic
/// search, so element labels are reproducible without polynomial tables.
class FiniteField {
public:
    explicit FiniteField(unsigned q);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }

    /// Modulus coefficients c_0..c_e (monic, c_e = 1); empty for prime fields.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    unsigned add(unsigned a, unsigned b) const;
    unsigned sub(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const;  // a != 0

    bool operator==(const FiniteField& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

private:
    unsigned p_ = 0, e_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    // dense op tables for small fields, lazy polynomial arithmetic otherwise
    bool tabled_ = false;
    std::vector<uint16_t> add_tab_, mul_tab_, inv_tab_, neg_tab_;

    unsigned mul_slow(unsigned a, unsigned b) const;
    unsigned add_slow(unsigned a, unsigned b) const;
    unsigned neg_slow(unsigned a) const;
    unsigned inv_slow(unsigned a) const;
    void verify_field_axioms() const;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Shared handle; fields are immutable so one instance serves any number of threads.
FieldPtr make_field(unsigned q);

}  // namespace pgcache
