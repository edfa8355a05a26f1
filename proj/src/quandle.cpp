#include "qcolor/quandle.hpp"

#include <unordered_map>

#include "qcolor/nt.hpp"

namespace qcolor {

GroupElement quandle_op(const GroupContext& ctx, const GroupElement& x, const GroupElement& y) {
    return ctx.mul(ctx.mul(y, x), ctx.inverse(y));
}

GroupElement quandle_op_iter(const GroupContext& ctx, const GroupElement& x, const GroupElement& y,
                             uint64_t k) {
    // x |> y |> ... |> y (k times) equals conjugation by y^k
    return quandle_op(ctx, x, ctx.power(y, k));
}

uint64_t element_order(const GroupContext& ctx, const GroupElement& g) {
    uint64_t k = ctx.order();
    for (uint64_t p : distinct_prime_factors(k)) {
        while (k % p == 0 && ctx.is_identity(ctx.power(g, k / p))) k /= p;
    }
    return k;
}

std::vector<GroupElement> centralizer(const GroupContext& ctx, const GroupElement& g) {
    std::vector<GroupElement> out;
    for (const GroupElement& h : ctx.elements()) {
        if (ctx.mul(g, h) == ctx.mul(h, g)) out.push_back(h);
    }
    return out;
}

ConjugacyInfo conjugacy_classes(const GroupContext& ctx) {
    std::vector<GroupElement> all = ctx.elements();
    std::unordered_map<uint64_t, uint32_t> index;
    index.reserve(all.size());
    for (uint32_t i = 0; i < all.size(); ++i) index.emplace(ctx.element_key(all[i]), i);

    std::vector<bool> assigned(all.size(), false);
    ConjugacyInfo info;
    for (uint32_t i = 0; i < all.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<bool> in_class(all.size(), false);
        for (const GroupElement& g : all) {
            uint32_t j = index.at(ctx.element_key(quandle_op(ctx, all[i], g)));
            in_class[j] = true;
        }
        std::vector<GroupElement> members;
        for (uint32_t j = 0; j < all.size(); ++j) {
            if (in_class[j]) {
                assigned[j] = true;
                members.push_back(all[j]);
            }
        }
        info.representatives.push_back(members.front());
        info.classes.push_back(std::move(members));
    }
    return info;
}

std::vector<GroupElement> conjugacy_representatives(const GroupContext& ctx) {
    return conjugacy_classes(ctx).representatives;
}

bool centralizer_grows(const GroupContext& ctx, const GroupElement& u, uint64_t p) {
    GroupElement up = ctx.power(u, p);
    for (const GroupElement& h : ctx.elements()) {
        if (ctx.mul(up, h) == ctx.mul(h, up) && ctx.mul(u, h) != ctx.mul(h, u)) return true;
    }
    return false;
}

GrowthWitness criterion_growth_search(const GroupContext& ctx, uint64_t p) {
    std::vector<GroupElement> all = ctx.elements();
    for (const GroupElement& u : conjugacy_representatives(ctx)) {
        GroupElement up = ctx.power(u, p);
        for (const GroupElement& h : all) {
            if (ctx.mul(up, h) == ctx.mul(h, up) && ctx.mul(u, h) != ctx.mul(h, u)) {
                return GrowthWitness{true, u, h};
            }
        }
    }
    return GrowthWitness{};
}

} // namespace qcolor
