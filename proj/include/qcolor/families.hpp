#pragma once

#include <string>
#include <vector>

#include "qcolor/coloring.hpp"
#include "qcolor/field.hpp"
#include "qcolor/group.hpp"

namespace qcolor {

/// Conjugacy type of an invertible 2x2 matrix over F_q:
///   Scalar             a*I
///   SplitDiagonalizable two distinct eigenvalues in F_q
///   NonSemisimple      repeated eigenvalue, not scalar
///   Irreducible        irreducible characteristic polynomial
enum class MatrixType { Scalar, SplitDiagonalizable, NonSemisimple, Irreducible };

std::string matrix_type_name(MatrixType t);

/// Classifies by counting roots of x^2 - tr(u) x + det(u) over F_q.
MatrixType classify_gl2(const Matrix2& u);

struct ClassRep {
    Matrix2 rep;
    MatrixType type;
};

/// Canonical conjugacy representatives of GL(2,q): scalars a*I (a != 0),
/// diagonals diag(a,b) with 0 < a < b, shears [[a,1],[0,a]] (a != 0), and
/// companions [[0,1],[a,b]] of the irreducible monic quadratics
/// x^2 - b x - a.
std::vector<ClassRep> gl2_class_representatives(uint32_t q);

/// Canonical conjugacy representatives of SL(2,q): scalars with a^2 = 1,
/// diagonals diag(a, a^{-1}) with a and a^{-1} identified, upper
/// triangulars [[a,b],[0,a]] with a^2 = 1 and b in {1, least non-residue},
/// and companions [[0,1],[-1,b]] with x^2 - b x + 1 irreducible.
std::vector<ClassRep> sl2_class_representatives(uint32_t q);

struct RecurrencePair {
    FieldElement x;
    FieldElement y;
};

/// Entries of the companion-matrix power: starting from (x_0,y_0) = (0,1)
/// with x_n = a*y_{n-1}, y_n = x_{n-1} + b*y_{n-1}; then
/// [[0,1],[a,b]]^n = [[x_{n-1},y_{n-1}],[x_n,y_n]]. Requires x^2 - b x - a
/// irreducible; the result is cross-checked against direct matrix powering.
RecurrencePair type4_recurrence(const FieldElement& a, const FieldElement& b, uint64_t n);

/// y_n evaluated in F_{q^2} as (2d)^{-1}((c+d)^{n+1} - (c-d)^{n+1}) with
/// c = b/2 and d = sqrt(b^2+4a)/2. Odd q only; agrees with the recurrence
/// for every n.
FieldElement type4_yn_closed_form(const FieldElement& a, const FieldElement& b, uint64_t n);

/// The plus-sign variant (2d)^{-1}((d+c)^{n+1} + (d-c)^{n+1}). For even n
/// it collapses to the same expression as the minus form; for odd n it
/// lands outside the base field, so the raw F_{q^2} value is returned for
/// comparison tables. Never used for decisions.
ExtFieldElement type4_yn_plus_sign_form(const FieldElement& a, const FieldElement& b, uint64_t n);

/// Whether u^p is a scalar matrix.
bool scalar_power_test(const Matrix2& u, uint64_t p);

/// Closed-form family predicates for K(m,p) colorability, p an odd prime
/// (any m coprime to p; the twist count is irrelevant at prime strand
/// counts). p=2 is rejected: that regime is served by the criterion
/// search.
bool gl2_colorable(uint64_t p, uint32_t q);
bool sl2_colorable(uint64_t p, uint32_t q);
bool dihedral_colorable(uint64_t p, uint64_t n);
bool symmetric_colorable(uint64_t p, uint64_t n);

/// Verdict wrapper dispatching on the context's family.
Verdict decide_by_predicate(const GroupContext& ctx, uint64_t p);

} // namespace qcolor
