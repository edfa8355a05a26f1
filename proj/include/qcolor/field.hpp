#pragma once

#include <cstdint>
#include <optional>

#include "qcolor/errors.hpp"

namespace qcolor {

/// A residue modulo a prime q. Arithmetic between elements of different
/// moduli throws MismatchError("field mismatch"). Primality of q is
/// enforced where contexts are created (group contexts, parsers), not on
/// every construction.
class FieldElement {
public:
    FieldElement(int64_t value, uint32_t q);

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return q_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement inverse() const; ///< throws MathDomainError("not invertible") on zero
    FieldElement pow(uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    bool operator==(const FieldElement&) const = default;

private:
    struct Raw {};
    FieldElement(uint32_t v, uint32_t q, Raw) : v_(v), q_(q) {}
    void require_same_field(const FieldElement& o) const;

    uint32_t v_;
    uint32_t q_;
};

/// Euler's criterion; zero counts as a residue.
bool is_quadratic_residue(const FieldElement& a);

/// Smallest square root if one exists (direct scan; moduli here are small).
std::optional<FieldElement> sqrt_mod(const FieldElement& a);

/// Least quadratic non-residue of an odd prime q.
uint32_t least_nonresidue(uint32_t q);

/// The quadratic extension F_{q^2} = F_q[w] / (w^2 - nu) with nu the least
/// quadratic non-residue of q. Only odd q admit this presentation.
struct ExtField {
    uint32_t q;
    uint32_t nu;

    static ExtField create(uint32_t q);
};

/// a0 + a1*w in F_{q^2}. Elements carry (q, nu) so that cross-context
/// arithmetic is rejected with "field mismatch".
class ExtFieldElement {
public:
    ExtFieldElement(FieldElement a0, FieldElement a1, uint32_t nu);

    static ExtFieldElement embed(const FieldElement& a0, uint32_t nu);
    static ExtFieldElement zero(const ExtField& f);
    static ExtFieldElement one(const ExtField& f);
    static ExtFieldElement omega(const ExtField& f);

    const FieldElement& base() const { return a0_; }
    const FieldElement& ext() const { return a1_; }
    uint32_t modulus() const { return a0_.modulus(); }
    uint32_t nonresidue() const { return nu_; }

    bool in_base_field() const { return a1_.is_zero(); }
    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }

    ExtFieldElement inverse() const; ///< throws MathDomainError("not invertible") on zero
    ExtFieldElement pow(uint64_t e) const;
    ExtFieldElement frobenius() const; ///< z -> z^q, i.e. a0 - a1*w

    friend ExtFieldElement operator+(const ExtFieldElement& a, const ExtFieldElement& b);
    friend ExtFieldElement operator-(const ExtFieldElement& a, const ExtFieldElement& b);
    friend ExtFieldElement operator*(const ExtFieldElement& a, const ExtFieldElement& b);
    ExtFieldElement operator-() const;

    bool operator==(const ExtFieldElement&) const = default;

private:
    void require_same_field(const ExtFieldElement& o) const;

    FieldElement a0_;
    FieldElement a1_;
    uint32_t nu_;
};

/// Multiplicative order of a nonzero element of F_{q^2}.
uint64_t ext_element_order(const ExtFieldElement& z);

struct ExtOrderCount {
    uint64_t total = 0;        ///< elements of multiplicative order exactly p
    uint64_t outside_base = 0; ///< those not lying in the embedded F_q
};

/// Counts order-p elements of F_{q^2} by full enumeration. q odd prime,
/// p odd prime.
ExtOrderCount count_ext_order_p(uint32_t q, uint64_t p);

} // namespace qcolor
