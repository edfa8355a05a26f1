#include "qcolor/field.hpp"

#include "qcolor/nt.hpp"

namespace qcolor {

FieldElement::FieldElement(int64_t value, uint32_t q) : q_(q) {
    if (q < 2) throw MathDomainError("field modulus must be at least 2");
    int64_t r = value % static_cast<int64_t>(q);
    if (r < 0) r += q;
    v_ = static_cast<uint32_t>(r);
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (q_ != o.q_) throw MismatchError("field mismatch");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    uint64_t s = uint64_t{a.v_} + b.v_;
    if (s >= a.q_) s -= a.q_;
    return FieldElement(static_cast<uint32_t>(s), a.q_, FieldElement::Raw{});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    uint64_t s = uint64_t{a.v_} + a.q_ - b.v_;
    if (s >= a.q_) s -= a.q_;
    return FieldElement(static_cast<uint32_t>(s), a.q_, FieldElement::Raw{});
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    uint64_t s = uint64_t{a.v_} * b.v_ % a.q_;
    return FieldElement(static_cast<uint32_t>(s), a.q_, FieldElement::Raw{});
}

FieldElement FieldElement::operator-() const {
    return FieldElement(v_ == 0 ? 0 : q_ - v_, q_, Raw{});
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement acc(1, q_, Raw{});
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inverse() const {
    if (v_ == 0) throw MathDomainError("not invertible");
    return pow(q_ - 2); // Fermat; q prime
}

bool is_quadratic_residue(const FieldElement& a) {
    uint32_t q = a.modulus();
    if (q == 2 || a.is_zero()) return true;
    return a.pow((q - 1) / 2).value() == 1;
}

std::optional<FieldElement> sqrt_mod(const FieldElement& a) {
    uint32_t q = a.modulus();
    for (uint32_t r = 0; r < q; ++r) {
        FieldElement c(r, q);
        if (c * c == a) return c;
    }
    return std::nullopt;
}

uint32_t least_nonresidue(uint32_t q) {
    if (q < 3 || !is_prime(q)) throw MathDomainError("least_nonresidue needs an odd prime");
    for (uint32_t v = 2; v < q; ++v) {
        if (!is_quadratic_residue(FieldElement(v, q))) return v;
    }
    throw MathDomainError("no quadratic non-residue found"); // unreachable for odd primes
}

ExtField ExtField::create(uint32_t q) {
    return ExtField{q, least_nonresidue(q)};
}

ExtFieldElement::ExtFieldElement(FieldElement a0, FieldElement a1, uint32_t nu)
    : a0_(a0), a1_(a1), nu_(nu) {
    if (a0_.modulus() != a1_.modulus()) throw MismatchError("field mismatch");
}

ExtFieldElement ExtFieldElement::embed(const FieldElement& a0, uint32_t nu) {
    return ExtFieldElement(a0, FieldElement(0, a0.modulus()), nu);
}

ExtFieldElement ExtFieldElement::zero(const ExtField& f) {
    return ExtFieldElement(FieldElement(0, f.q), FieldElement(0, f.q), f.nu);
}

ExtFieldElement ExtFieldElement::one(const ExtField& f) {
    return ExtFieldElement(FieldElement(1, f.q), FieldElement(0, f.q), f.nu);
}

ExtFieldElement ExtFieldElement::omega(const ExtField& f) {
    return ExtFieldElement(FieldElement(0, f.q), FieldElement(1, f.q), f.nu);
}

void ExtFieldElement::require_same_field(const ExtFieldElement& o) const {
    if (modulus() != o.modulus() || nu_ != o.nu_) throw MismatchError("field mismatch");
}

ExtFieldElement operator+(const ExtFieldElement& a, const ExtFieldElement& b) {
    a.require_same_field(b);
    return ExtFieldElement(a.a0_ + b.a0_, a.a1_ + b.a1_, a.nu_);
}

ExtFieldElement operator-(const ExtFieldElement& a, const ExtFieldElement& b) {
    a.require_same_field(b);
    return ExtFieldElement(a.a0_ - b.a0_, a.a1_ - b.a1_, a.nu_);
}

ExtFieldElement operator*(const ExtFieldElement& a, const ExtFieldElement& b) {
    a.require_same_field(b);
    FieldElement nu(a.nu_, a.modulus());
    // (a0 + a1 w)(b0 + b1 w) = (a0 b0 + nu a1 b1) + (a0 b1 + a1 b0) w
    return ExtFieldElement(a.a0_ * b.a0_ + nu * (a.a1_ * b.a1_),
                           a.a0_ * b.a1_ + a.a1_ * b.a0_, a.nu_);
}

ExtFieldElement ExtFieldElement::operator-() const {
    return ExtFieldElement(-a0_, -a1_, nu_);
}

ExtFieldElement ExtFieldElement::inverse() const {
    if (is_zero()) throw MathDomainError("not invertible");
    // (a0 - a1 w) / (a0^2 - nu a1^2); the norm is nonzero since nu is a non-residue
    FieldElement nu(nu_, modulus());
    FieldElement norm = a0_ * a0_ - nu * (a1_ * a1_);
    FieldElement ni = norm.inverse();
    return ExtFieldElement(a0_ * ni, -a1_ * ni, nu_);
}

ExtFieldElement ExtFieldElement::pow(uint64_t e) const {
    ExtFieldElement acc = ExtFieldElement::embed(FieldElement(1, modulus()), nu_);
    ExtFieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ExtFieldElement ExtFieldElement::frobenius() const {
    // w^q = -w since nu^((q-1)/2) = -1
    return ExtFieldElement(a0_, -a1_, nu_);
}

uint64_t ext_element_order(const ExtFieldElement& z) {
    if (z.is_zero()) throw MathDomainError("zero has no multiplicative order");
    uint64_t q = z.modulus();
    uint64_t group = q * q - 1;
    uint64_t k = group;
    ExtFieldElement one = ExtFieldElement::embed(FieldElement(1, z.modulus()), z.nonresidue());
    for (uint64_t p : distinct_prime_factors(group)) {
        while (k % p == 0 && z.pow(k / p) == one) k /= p;
    }
    return k;
}

ExtOrderCount count_ext_order_p(uint32_t q, uint64_t p) {
    if (!is_prime(q) || q == 2) throw MathDomainError("q must be an odd prime");
    if (!is_prime(p) || p == 2) throw MathDomainError("p must be an odd prime");
    ExtField f = ExtField::create(q);
    ExtOrderCount count;
    for (uint32_t a0 = 0; a0 < q; ++a0) {
        for (uint32_t a1 = 0; a1 < q; ++a1) {
            if (a0 == 0 && a1 == 0) continue;
            ExtFieldElement z(FieldElement(a0, q), FieldElement(a1, q), f.nu);
            if (ext_element_order(z) != p) continue;
            ++count.total;
            if (!z.in_base_field()) ++count.outside_base;
        }
    }
    return count;
}

} // namespace qcolor
