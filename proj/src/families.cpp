#include "qcolor/families.hpp"

#include "qcolor/nt.hpp"

namespace qcolor {

namespace {

constexpr uint64_t kMaxRecurrenceSteps = 10'000'000;

/// Distinct roots of x^2 - b x - a over F_q.
uint32_t quadratic_root_count(const FieldElement& a, const FieldElement& b) {
    const uint32_t q = a.modulus();
    uint32_t roots = 0;
    for (uint32_t x = 0; x < q; ++x) {
        FieldElement fx(x, q);
        if (fx * fx - b * fx - a == FieldElement(0, q)) ++roots;
    }
    return roots;
}

bool companion_irreducible(const FieldElement& a, const FieldElement& b) {
    return quadratic_root_count(a, b) == 0;
}

void require_companion(const FieldElement& a, const FieldElement& b) {
    if (a.modulus() != b.modulus()) throw MismatchError("field mismatch");
    if (!companion_irreducible(a, b)) throw MathDomainError("not type 4");
}

/// c = b/2 embedded in F_{q^2} and d = sqrt(b^2+4a)/2 (a pure-omega
/// element; b^2+4a is a non-residue whenever x^2-bx-a is irreducible).
struct SplitEigenParts {
    ExtFieldElement c;
    ExtFieldElement d;
};

SplitEigenParts eigen_parts(const FieldElement& a, const FieldElement& b) {
    const uint32_t q = a.modulus();
    const ExtField field = ExtField::create(q);
    const FieldElement half = FieldElement(2, q).inverse();
    const FieldElement delta = b * b + FieldElement(4, q) * a;
    auto s = sqrt_mod(delta * FieldElement(field.nu, q).inverse());
    if (!s) throw Error("internal error: discriminant/nu is not a residue");
    return SplitEigenParts{ExtFieldElement::embed(b * half, field.nu),
                           ExtFieldElement(FieldElement(0, q), *s * half, field.nu)};
}

} // namespace

std::string matrix_type_name(MatrixType t) {
    switch (t) {
    case MatrixType::Scalar: return "scalar";
    case MatrixType::SplitDiagonalizable: return "split";
    case MatrixType::NonSemisimple: return "nonsemisimple";
    case MatrixType::Irreducible: return "irreducible";
    }
    return "?";
}

MatrixType classify_gl2(const Matrix2& u) {
    if (det(u).is_zero()) throw MathDomainError("not in GL");
    if (is_scalar(u)) return MatrixType::Scalar;
    // characteristic polynomial x^2 - tr x + det, i.e. x^2 - b x - a with
    // b = tr and a = -det
    const FieldElement b = u.e00 + u.e11;
    const FieldElement a = -det(u);
    switch (quadratic_root_count(a, b)) {
    case 0: return MatrixType::Irreducible;
    case 1: return MatrixType::NonSemisimple;
    default: return MatrixType::SplitDiagonalizable;
    }
}

std::vector<ClassRep> gl2_class_representatives(uint32_t q) {
    if (!is_prime(q)) throw MathDomainError("q must be prime");
    std::vector<ClassRep> out;
    auto f = [q](uint32_t v) { return FieldElement(v, q); };
    for (uint32_t a = 1; a < q; ++a) {
        out.push_back({Matrix2{f(a), f(0), f(0), f(a)}, MatrixType::Scalar});
    }
    for (uint32_t a = 1; a < q; ++a) {
        for (uint32_t b = a + 1; b < q; ++b) {
            out.push_back({Matrix2{f(a), f(0), f(0), f(b)}, MatrixType::SplitDiagonalizable});
        }
    }
    for (uint32_t a = 1; a < q; ++a) {
        out.push_back({Matrix2{f(a), f(1), f(0), f(a)}, MatrixType::NonSemisimple});
    }
    for (uint32_t a = 0; a < q; ++a) {
        for (uint32_t b = 0; b < q; ++b) {
            if (companion_irreducible(f(a), f(b))) {
                out.push_back({Matrix2{f(0), f(1), f(a), f(b)}, MatrixType::Irreducible});
            }
        }
    }
    return out;
}

std::vector<ClassRep> sl2_class_representatives(uint32_t q) {
    if (!is_prime(q)) throw MathDomainError("q must be prime");
    std::vector<ClassRep> out;
    auto f = [q](uint32_t v) { return FieldElement(v, q); };

    for (uint32_t a = 1; a < q; ++a) {
        if (a * a % q == 1) out.push_back({Matrix2{f(a), f(0), f(0), f(a)}, MatrixType::Scalar});
    }
    for (uint32_t a = 2; a < q; ++a) {
        const uint32_t inv = f(a).inverse().value();
        if (a * a % q != 1 && a < inv) {
            out.push_back({Matrix2{f(a), f(0), f(0), f(inv)}, MatrixType::SplitDiagonalizable});
        }
    }
    if (q == 2) {
        out.push_back({Matrix2{f(1), f(1), f(0), f(1)}, MatrixType::NonSemisimple});
    } else {
        const uint32_t nu = least_nonresidue(q);
        for (uint32_t a : {uint32_t{1}, q - 1}) {
            for (uint32_t b : {uint32_t{1}, nu}) {
                out.push_back({Matrix2{f(a), f(b), f(0), f(a)}, MatrixType::NonSemisimple});
            }
        }
    }
    for (uint32_t b = 0; b < q; ++b) {
        if (companion_irreducible(f(q - 1), f(b))) {
            out.push_back({Matrix2{f(0), f(1), f(q - 1), f(b)}, MatrixType::Irreducible});
        }
    }
    return out;
}

RecurrencePair type4_recurrence(const FieldElement& a, const FieldElement& b, uint64_t n) {
    require_companion(a, b);
    if (n > kMaxRecurrenceSteps) throw SearchInfeasibleError("search infeasible: n too large");
    const uint32_t q = a.modulus();
    FieldElement x(0, q), y(1, q);
    for (uint64_t i = 1; i <= n; ++i) {
        const FieldElement nx = a * y;
        const FieldElement ny = x + b * y;
        x = nx;
        y = ny;
    }
    if (n >= 1) {
        const Matrix2 u{FieldElement(0, q), FieldElement(1, q), a, b};
        const Matrix2 un = matrix_power(u, n);
        if (!(un.e10 == x) || !(un.e11 == y)) {
            throw Error("internal error: recurrence disagrees with matrix power");
        }
    }
    return RecurrencePair{x, y};
}

FieldElement type4_yn_closed_form(const FieldElement& a, const FieldElement& b, uint64_t n) {
    require_companion(a, b);
    if (a.modulus() == 2) throw MathDomainError("use recurrence path");
    const SplitEigenParts e = eigen_parts(a, b);
    const ExtFieldElement num = (e.c + e.d).pow(n + 1) - (e.c - e.d).pow(n + 1);
    const ExtFieldElement val = (e.d + e.d).inverse() * num;
    if (!val.in_base_field()) throw Error("internal error: closed form left the base field");
    return val.base();
}

ExtFieldElement type4_yn_plus_sign_form(const FieldElement& a, const FieldElement& b, uint64_t n) {
    require_companion(a, b);
    if (a.modulus() == 2) throw MathDomainError("use recurrence path");
    const SplitEigenParts e = eigen_parts(a, b);
    const ExtFieldElement num = (e.d + e.c).pow(n + 1) + (e.d - e.c).pow(n + 1);
    return (e.d + e.d).inverse() * num;
}

bool scalar_power_test(const Matrix2& u, uint64_t p) {
    if (det(u).is_zero()) throw MathDomainError("not in GL");
    return is_scalar(matrix_power(u, p));
}

namespace {

void require_odd_prime(uint64_t p) {
    if (!is_prime(p)) throw MathDomainError("p must be prime");
    if (p == 2) throw MathDomainError("use criterion path");
}

} // namespace

bool gl2_colorable(uint64_t p, uint32_t q) {
    require_odd_prime(p);
    if (!is_prime(q)) throw MathDomainError("q must be prime");
    const uint64_t qq = q;
    unsigned __int128 prod = qq % p;
    prod = prod * ((qq + 1) % p) % p;
    prod = prod * ((qq - 1) % p) % p;
    return prod == 0;
}

bool sl2_colorable(uint64_t p, uint32_t q) {
    return gl2_colorable(p, q); // same numeric condition
}

bool dihedral_colorable(uint64_t p, uint64_t n) {
    require_odd_prime(p);
    if (n < 1) throw MathDomainError("n must be positive");
    return n % p == 0;
}

bool symmetric_colorable(uint64_t p, uint64_t n) {
    require_odd_prime(p);
    if (n < 1) throw MathDomainError("n must be positive");
    return p <= n;
}

Verdict decide_by_predicate(const GroupContext& ctx, uint64_t p) {
    Verdict v;
    v.method = Method::Predicate;
    switch (ctx.family()) {
    case GroupFamily::Symmetric: v.colorable = symmetric_colorable(p, ctx.param()); break;
    case GroupFamily::Dihedral: v.colorable = dihedral_colorable(p, ctx.param()); break;
    case GroupFamily::GL2: v.colorable = gl2_colorable(p, ctx.param()); break;
    case GroupFamily::SL2: v.colorable = sl2_colorable(p, ctx.param()); break;
    }
    v.add_caveat(Caveat::SufficiencyUnverified);
    return v;
}

} // namespace qcolor
