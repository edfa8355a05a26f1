#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "qcolor/errors.hpp"
#include "qcolor/families.hpp"
#include "qcolor/quandle.hpp"

using namespace qcolor;

namespace {

Matrix2 mat(uint32_t q, int64_t a, int64_t b, int64_t c, int64_t d) {
    return Matrix2{FieldElement(a, q), FieldElement(b, q), FieldElement(c, q),
                   FieldElement(d, q)};
}

// number of distinct conjugacy classes hit by the representatives
size_t classes_covered(const GroupContext& ctx, const std::vector<ClassRep>& reps) {
    ConjugacyInfo info = conjugacy_classes(ctx);
    std::map<uint64_t, size_t> member_to_class;
    for (size_t c = 0; c < info.classes.size(); ++c) {
        for (const auto& g : info.classes[c]) member_to_class[ctx.element_key(g)] = c;
    }
    std::set<size_t> hit;
    for (const ClassRep& r : reps) hit.insert(member_to_class.at(ctx.element_key(r.rep)));
    return hit.size();
}

}  // namespace

TEST_CASE("matrix type classification over F_5") {
    CHECK(classify_gl2(mat(5, 2, 0, 0, 2)) == MatrixType::Scalar);
    CHECK(classify_gl2(mat(5, 1, 0, 0, 2)) == MatrixType::SplitDiagonalizable);
    CHECK(classify_gl2(mat(5, 1, 1, 0, 1)) == MatrixType::NonSemisimple);
    CHECK(classify_gl2(mat(5, 0, 1, 2, 0)) == MatrixType::Irreducible);  // x^2 - 2
    CHECK(classify_gl2(mat(5, 3, 1, 1, 3)) == MatrixType::SplitDiagonalizable);
    CHECK_THROWS_AS(classify_gl2(mat(5, 1, 2, 2, 4)), MathDomainError);  // singular
}

TEST_CASE("GL2 class representatives per field size") {
    std::map<uint32_t, size_t> expected = {{2, 3}, {3, 8}, {5, 24}};
    for (auto [q, count] : expected) {
        auto reps = gl2_class_representatives(q);
        CHECK(reps.size() == count);  // q^2 - 1
        for (const ClassRep& r : reps) CHECK(classify_gl2(r.rep) == r.type);

        GroupContext ctx(GroupFamily::GL2, q);
        for (const ClassRep& r : reps) CHECK_NOTHROW(ctx.require_member(r.rep));
        CHECK(classes_covered(ctx, reps) == count);
        CHECK(conjugacy_classes(ctx).classes.size() == count);
    }
}

TEST_CASE("SL2 class representatives per field size") {
    std::map<uint32_t, size_t> expected = {{2, 3}, {3, 7}, {5, 9}};  // q + 4 for odd q
    for (auto [q, count] : expected) {
        auto reps = sl2_class_representatives(q);
        CHECK(reps.size() == count);
        GroupContext ctx(GroupFamily::SL2, q);
        for (const ClassRep& r : reps) CHECK_NOTHROW(ctx.require_member(r.rep));
        CHECK(classes_covered(ctx, reps) == count);
        CHECK(conjugacy_classes(ctx).classes.size() == count);
    }
}

TEST_CASE("type 4 recurrence starts at (0,1) and tracks matrix powers") {
    FieldElement a(2, 5), b(0, 5);
    RecurrencePair p0 = type4_recurrence(a, b, 0);
    CHECK(p0.x.value() == 0);
    CHECK(p0.y.value() == 1);
    // the recurrence itself cross-checks against matrix powers internally
    for (uint64_t n = 1; n <= 20; ++n) CHECK_NOTHROW(type4_recurrence(a, b, n));
    CHECK_THROWS_AS(type4_recurrence(FieldElement(1, 5), FieldElement(1, 5), 3),
                    MathDomainError);  // x^2 - x - 1 splits over F_5
}

TEST_CASE("closed form with the minus sign matches the recurrence") {
    for (uint32_t q : {3u, 5u, 7u}) {
        for (uint32_t av = 1; av < q; ++av) {
            for (uint32_t bv = 0; bv < q; ++bv) {
                FieldElement a(av, q), b(bv, q);
                Matrix2 u = mat(q, 0, 1, av, bv);
                if (classify_gl2(u) != MatrixType::Irreducible) continue;
                for (uint64_t n = 0; n <= 30; ++n) {
                    CHECK(type4_yn_closed_form(a, b, n) == type4_recurrence(a, b, n).y);
                }
            }
        }
    }
}

TEST_CASE("plus sign variant leaves the base field at odd indices") {
    // q=5, a=2, b=0: u^2 = 2I, so y_n follows powers of sqrt(2)
    FieldElement a(2, 5), b(0, 5);
    for (uint64_t n = 0; n <= 12; ++n) {
        ExtFieldElement plus = type4_yn_plus_sign_form(a, b, n);
        if (n % 2 == 0) {
            CHECK(plus.in_base_field());
            CHECK(plus.base() == type4_recurrence(a, b, n).y);
        } else {
            CHECK_FALSE(plus.in_base_field());
        }
    }
    ExtFieldElement p1 = type4_yn_plus_sign_form(a, b, 1);
    CHECK(p1.base().value() == 0);
    CHECK(p1.ext().value() == 1);  // exactly omega = sqrt(2)
}

TEST_CASE("q=2 falls back to the recurrence") {
    FieldElement a(1, 2), b(1, 2);
    CHECK_THROWS_AS(type4_yn_closed_form(a, b, 3), MathDomainError);
    // Fibonacci mod 2 vanishes exactly at n = 2 mod 3
    for (uint64_t n = 0; n <= 20; ++n) {
        CHECK((type4_recurrence(a, b, n).y.value() == 0) == (n % 3 == 2));
    }
}

TEST_CASE("scalar power test") {
    Matrix2 u = mat(5, 0, 1, 2, 0);  // u^2 = 2I
    CHECK_FALSE(scalar_power_test(u, 1));
    CHECK(scalar_power_test(u, 2));
    CHECK_FALSE(scalar_power_test(u, 3));
    CHECK(scalar_power_test(u, 8));
    CHECK(scalar_power_test(mat(5, 3, 0, 0, 3), 1));
}

TEST_CASE("closed form predicates") {
    CHECK(gl2_colorable(3, 2));        // 3 divides 2*3*1
    CHECK_FALSE(gl2_colorable(5, 2));
    CHECK(gl2_colorable(3, 5));
    CHECK(gl2_colorable(5, 5));
    CHECK_FALSE(gl2_colorable(7, 5));
    CHECK(gl2_colorable(5, 19));       // 5 divides 20
    CHECK(sl2_colorable(3, 7) == gl2_colorable(3, 7));
    CHECK(sl2_colorable(13, 13));

    CHECK(dihedral_colorable(3, 6));
    CHECK_FALSE(dihedral_colorable(5, 6));
    CHECK_FALSE(dihedral_colorable(3, 4));
    CHECK(dihedral_colorable(7, 21));

    CHECK(symmetric_colorable(3, 3));
    CHECK_FALSE(symmetric_colorable(5, 3));
    CHECK(symmetric_colorable(5, 6));
    CHECK_FALSE(symmetric_colorable(7, 6));

    CHECK_THROWS_AS(gl2_colorable(2, 3), MathDomainError);   // p=2 has no closed form here
    CHECK_THROWS_AS(gl2_colorable(9, 3), MathDomainError);   // p not prime
    CHECK_THROWS_AS(gl2_colorable(3, 4), MathDomainError);   // q not prime
    CHECK_THROWS_AS(symmetric_colorable(2, 4), MathDomainError);
}

TEST_CASE("predicate verdicts carry the sufficiency caveat") {
    GroupContext gl3(GroupFamily::GL2, 3);
    Verdict v = decide_by_predicate(gl3, 3);
    CHECK(v.colorable);
    CHECK(v.method == Method::Predicate);
    CHECK(v.has_caveat(Caveat::SufficiencyUnverified));

    GroupContext s3(GroupFamily::Symmetric, 3);
    CHECK_FALSE(decide_by_predicate(s3, 5).colorable);
    GroupContext d6(GroupFamily::Dihedral, 6);
    CHECK(decide_by_predicate(d6, 3).colorable);
}

TEST_CASE("an irreducible element whose eigenvalue order blocks growth") {
    // u = [[0,1],[2,0]] over F_5 has eigenvalue order 8, and 8 does not
    // divide p(q-1) = 12, so conjugation by u^3 centralizes nothing new
    // even though p=3 divides q+1=6
    GroupContext gl5(GroupFamily::GL2, 5);
    Matrix2 u = mat(5, 0, 1, 2, 0);
    CHECK(element_order(gl5, GroupElement(u)) == 8);
    CHECK_FALSE(centralizer_grows(gl5, GroupElement(u), 3));

    // a companion of x^2 + x + 1 has eigenvalue order 3, which divides 12
    Matrix2 w = mat(5, 0, 1, 4, 4);
    CHECK(element_order(gl5, GroupElement(w)) == 3);
    CHECK(centralizer_grows(gl5, GroupElement(w), 3));
}
