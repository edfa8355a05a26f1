#pragma once

#include <optional>
#include <vector>

#include "qcolor/group.hpp"

namespace qcolor {

/// The conjugation quandle operation x |> y = y * x * y^{-1}.
GroupElement quandle_op(const GroupContext& ctx, const GroupElement& x, const GroupElement& y);

/// Iterated x |> y |> y ... (k times).
GroupElement quandle_op_iter(const GroupContext& ctx, const GroupElement& x, const GroupElement& y,
                             uint64_t k);

/// Multiplicative order of g, by divisor refinement of |G|.
uint64_t element_order(const GroupContext& ctx, const GroupElement& g);

/// All elements commuting with g, in enumeration order.
std::vector<GroupElement> centralizer(const GroupContext& ctx, const GroupElement& g);

/// Conjugacy classes of G. Classes are ordered by their smallest member's
/// enumeration index, members inside a class likewise; the representative
/// is that smallest member.
struct ConjugacyInfo {
    std::vector<std::vector<GroupElement>> classes;
    std::vector<GroupElement> representatives;
};

ConjugacyInfo conjugacy_classes(const GroupContext& ctx);
std::vector<GroupElement> conjugacy_representatives(const GroupContext& ctx);

/// Whether C(u^p) strictly contains C(u), i.e. some element commutes with
/// u^p but not with u.
bool centralizer_grows(const GroupContext& ctx, const GroupElement& u, uint64_t p);

/// Outcome of the search for a growing centralizer across the whole group.
/// When found, x commutes with u^p but not with u; the pair seeds the
/// shifted-conjugates tuple construction.
struct GrowthWitness {
    bool grows = false;
    std::optional<GroupElement> u;
    std::optional<GroupElement> x;
};

/// Searches u over conjugacy representatives (the growth property is a
/// class function) in representative order; for the found u, x is the
/// first element in enumeration order commuting with u^p but not with u.
GrowthWitness criterion_growth_search(const GroupContext& ctx, uint64_t p);

} // namespace qcolor
