#include "qcolor/transforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qcolor/nt.hpp"

namespace qcolor {

namespace {

constexpr uint64_t kMaxStrands = 1'000'000;

void require_verified(const ColoringTuple& tuple, uint64_t m) {
    if (!verify_tuple_iii(tuple, m)) throw NotAColoringError("tuple does not color K(m,n)");
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw MathDomainError("parameter product overflows");
    return a * b;
}

} // namespace

ColoringTuple extend_twists(const ColoringTuple& tuple, uint64_t m, uint64_t t) {
    if (t < 1) throw MathDomainError("t must be positive");
    const uint64_t tm = checked_mul(t, m);
    const uint64_t n = tuple.size();
    if (m < 1 || std::gcd(tm, n) != 1) throw LinkParametersError("link parameters");
    require_verified(tuple, m);
    if (!verify_tuple_iii(tuple, tm)) {
        throw Error("internal error: twist extension failed to reverify");
    }
    return tuple;
}

ColoringTuple extend_strands(const ColoringTuple& tuple, uint64_t m, uint64_t t) {
    if (t < 1) throw MathDomainError("t must be positive");
    const uint64_t n = tuple.size();
    const uint64_t tn = checked_mul(t, n);
    if (tn > kMaxStrands) throw SearchInfeasibleError("search infeasible: too many strands");
    if (m < 1 || std::gcd(m, tn) != 1) throw LinkParametersError("link parameters");
    require_verified(tuple, m);

    std::vector<GroupElement> ys;
    ys.reserve(static_cast<size_t>(tn));
    for (uint64_t j = 0; j < tn; ++j) ys.push_back(tuple.at(static_cast<size_t>(j % n)));
    ColoringTuple out(tuple.context(), std::move(ys));
    if (!verify_tuple_iii(out, m)) {
        throw Error("internal error: strand extension failed to reverify");
    }
    return out;
}

ColoringTuple contract_strands(const ColoringTuple& tuple, uint64_t n, uint64_t t, uint64_t m) {
    if (t < 1 || n < 1) throw MathDomainError("t and n must be positive");
    if (tuple.size() != checked_mul(t, n)) throw ShapeMismatchError("shape mismatch");
    require_verified(tuple, m);

    const GroupContext& ctx = tuple.context();
    std::vector<GroupElement> xs;
    xs.reserve(static_cast<size_t>(n));
    for (uint64_t i = 0; i < n; ++i) {
        GroupElement block = ctx.identity();
        for (uint64_t j = 0; j < t; ++j) {
            block = ctx.mul(block, tuple.at(static_cast<size_t>(i * t + j)));
        }
        xs.push_back(std::move(block));
    }
    ColoringTuple out(ctx, std::move(xs));
    if (!verify_tuple_iii(out, m)) {
        throw Error("internal error: strand contraction failed to reverify");
    }
    return out;
}

std::vector<PrimePair> reduce_to_prime_pairs(uint64_t m, uint64_t n) {
    if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw LinkParametersError("link parameters");
    std::vector<PrimePair> pairs;
    if (m == 1 || n == 1) return pairs; // unknot, only trivially colorable
    for (uint64_t p : distinct_prime_factors(m)) {
        for (uint64_t q : distinct_prime_factors(n)) pairs.push_back(PrimePair{p, q});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const PrimePair& a, const PrimePair& b) {
                  return a.p != b.p ? a.p < b.p : a.q < b.q;
              });
    return pairs;
}

Verdict decide_general(const GroupContext& ctx, uint64_t m, uint64_t n) {
    if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw LinkParametersError("link parameters");

    Verdict v;
    v.method = Method::Reduction;

    if (m == 1 || n == 1) {
        v.colorable = false;
        v.add_caveat(Caveat::Unknot);
        return v;
    }

    std::map<uint64_t, Verdict> criterion_cache;
    auto criterion_at = [&](uint64_t p) -> const Verdict& {
        auto it = criterion_cache.find(p);
        if (it == criterion_cache.end()) it = criterion_cache.emplace(p, decide_by_criterion(ctx, p)).first;
        return it->second;
    };

    for (const PrimePair& pair : reduce_to_prime_pairs(m, n)) {
        for (uint64_t prime : {pair.q, pair.p}) { // strand side first
            if (prime == 2) continue;
            const Verdict& c = criterion_at(prime);
            if (c.colorable) {
                v.colorable = true;
                v.prime_pair = std::make_pair(pair.p, pair.q);
                v.pair_witness = c.pair_witness;
                v.add_caveat(Caveat::SufficiencyUnverified);
                return v;
            }
        }
    }

    v.colorable = false;
    v.add_caveat(Caveat::SufficiencyUnverified);
    return v;
}

} // namespace qcolor
