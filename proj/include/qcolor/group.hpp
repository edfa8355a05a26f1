#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcolor/field.hpp"

namespace qcolor {

/// A permutation of {1..n}, stored as a 0-based image vector.
/// Composition is left to right: (f * g) applies f first, then g.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<uint8_t> image); ///< validates bijection

    static Permutation identity(uint32_t n);

    uint32_t degree() const { return static_cast<uint32_t>(image_.size()); }
    uint8_t map(uint8_t i) const { return image_[i]; }
    const std::vector<uint8_t>& image() const { return image_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<uint8_t> image_;
};

Permutation compose(const Permutation& f, const Permutation& g); ///< f first, then g
Permutation inverse_of(const Permutation& f);

/// Normal form s^t r^k in the dihedral group of the n-gon, with the
/// rewrite rule r s = s r^{-1}. t in {0,1}, 0 <= k < n.
struct DihedralWord {
    uint8_t reflect = 0;
    uint32_t rot = 0;
    uint32_t ngon = 0;

    bool operator==(const DihedralWord&) const = default;
};

DihedralWord compose(const DihedralWord& a, const DihedralWord& b);
DihedralWord inverse_of(const DihedralWord& a);

/// A 2x2 matrix over F_q. Whether it belongs to GL or SL is a property of
/// the enclosing group context, validated when elements enter the system.
struct Matrix2 {
    FieldElement e00, e01, e10, e11;

    bool operator==(const Matrix2&) const = default;
};

Matrix2 mul(const Matrix2& a, const Matrix2& b);
FieldElement det(const Matrix2& a);
Matrix2 inverse_of(const Matrix2& a);
Matrix2 matrix_identity(uint32_t q);
Matrix2 matrix_power(const Matrix2& a, uint64_t e);
bool is_scalar(const Matrix2& a);

using GroupElement = std::variant<Permutation, DihedralWord, Matrix2>;

enum class GroupFamily { Symmetric, Dihedral, GL2, SL2 };

/// One of the supported finite groups: S:n, D:n, GL2:q, SL2:q.
///
/// The context owns the multiplication convention (left-to-right for
/// permutations), enumeration order, and the element grammar:
///   permutations  "(1 2 3)(4 5)", identity "()"
///   dihedral      "s^t r^k"
///   matrices      "[[a,b],[c,d]]"
class GroupContext {
public:
    GroupContext(GroupFamily family, uint32_t param);

    /// Parses "S:<n>", "D:<n>", "GL2:<q>" or "SL2:<q>".
    static GroupContext parse(std::string_view descriptor);
    std::string descriptor() const;

    GroupFamily family() const { return family_; }
    uint32_t param() const { return param_; }

    uint64_t order() const; ///< n!, 2n, (q^2-1)(q^2-q), q(q^2-1)

    GroupElement identity() const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, uint64_t e) const;
    bool is_identity(const GroupElement& a) const;

    /// Cheap structural compatibility (family, degree, modulus); used by
    /// every operation. Determinants are validated only by require_member.
    bool compatible(const GroupElement& a) const;
    /// Full membership check, including det != 0 resp. det = 1 for the
    /// matrix families. Throws MismatchError("group mismatch").
    void require_member(const GroupElement& a) const;

    /// All elements in a fixed deterministic order: lexicographic image
    /// vectors for S:n, rotations then reflections for D:n, lexicographic
    /// entries for the matrix families. Identity comes first for S and D.
    std::vector<GroupElement> elements() const;

    /// Injective key, used for indexing during conjugacy computations.
    uint64_t element_key(const GroupElement& a) const;

    std::string format(const GroupElement& a) const;
    GroupElement parse_element(std::string_view text) const;

    bool operator==(const GroupContext&) const = default;

private:
    void require_compatible(const GroupElement& a) const;

    GroupFamily family_;
    uint32_t param_;
};

std::string family_tag(GroupFamily f); ///< "S", "D", "GL2", "SL2"

} // namespace qcolor
