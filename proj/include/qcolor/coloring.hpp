#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcolor/group.hpp"
#include "qcolor/quandle.hpp"

namespace qcolor {

/// The torus knot K(m,n): closure of the n-strand braid with m twists.
/// Rejects gcd(m,n) != 1 (a torus link, not a knot).
struct TorusKnot {
    uint64_t m;
    uint64_t n;

    TorusKnot(uint64_t m, uint64_t n);
};

/// Colors x_0..x_{n-1} of the initial arcs, validated against the group.
class ColoringTuple {
public:
    ColoringTuple(GroupContext ctx, std::vector<GroupElement> colors);

    const GroupContext& context() const { return ctx_; }
    size_t size() const { return colors_.size(); }
    const GroupElement& at(size_t i) const { return colors_[i]; }
    const std::vector<GroupElement>& colors() const { return colors_; }

    bool operator==(const ColoringTuple&) const = default;

private:
    GroupContext ctx_;
    std::vector<GroupElement> colors_;
};

using BridgeColors = std::vector<GroupElement>;

/// The product x_{n-m} ... x_{n-1} of m consecutive colors ending at index
/// n-1 (indices mod n). Conjugation by it shifts a valid coloring by -m.
GroupElement harlequin(const ColoringTuple& tuple, uint64_t m);

/// Condition (ii): all n cyclic window products of length m agree.
bool verify_tuple_ii(const ColoringTuple& tuple, uint64_t m);

/// Condition (iii): x_i |> u = x_{(i-m) mod n} with u the harlequin.
bool verify_tuple_iii(const ColoringTuple& tuple, uint64_t m);

/// Bridge colors y_0..y_{m-1}: y_0 = x_0 and
/// y_j = x_{j mod n} |> y_0 |> ... |> y_{j-1}. Requires a verified tuple;
/// double-checks the terminal arcs and throws on inconsistency (which
/// would indicate an implementation bug, not bad input).
BridgeColors expand_to_diagram(const ColoringTuple& tuple, uint64_t m);

enum class TupleClass { Trivial, Nontrivial };

/// Trivial means constant.
TupleClass classify_tuple(const ColoringTuple& tuple);

enum class Method { Criterion, BruteForce, Predicate, Reduction };

/// SufficiencyUnverified: the verdict leans on the centralizer criterion,
/// whose "colorable" direction is not machine-verified here (the oracle
/// contradicts it for some twist counts; see README).
/// P2Experimental: criterion evaluated at p=2, outside its intended regime.
/// Unknot: m=1 or n=1, only trivially colorable, decided definitively.
enum class Caveat { SufficiencyUnverified, P2Experimental, Unknot };

/// A criterion witness: x0 commutes with u^p but not with u.
struct PairWitness {
    GroupElement u;
    GroupElement x0;
    uint64_t p;
};

struct Verdict {
    bool colorable = false;
    Method method = Method::Criterion;
    std::optional<PairWitness> pair_witness;
    std::optional<ColoringTuple> tuple_witness;
    std::optional<std::pair<uint64_t, uint64_t>> prime_pair;
    std::vector<Caveat> caveats;

    void add_caveat(Caveat c);
    bool has_caveat(Caveat c) const;
};

inline constexpr uint64_t kDefaultBudget = 100'000'000;

struct SearchOptions {
    uint64_t budget = kDefaultBudget; ///< counted in placed colors
    bool symmetry_reduction = true;   ///< restrict x_0 to conjugacy representatives
};

/// The centralizer criterion for K(m,p), p prime, any m coprime to p:
/// colorable iff C(u^p) strictly exceeds C(u) for some u. The negative
/// direction is sound; positives carry SufficiencyUnverified.
Verdict decide_by_criterion(const GroupContext& ctx, uint64_t p);

struct ConstructedTuple {
    ColoringTuple tuple;
    bool verified;
};

/// The shifted-conjugates construction x_{(-i*m) mod p} = u^i * x0 * u^{-i}
/// for i = 0..p-1; always returns the tuple, plus its verify_tuple_iii
/// outcome (which can be false; that is the point of checking).
ConstructedTuple witness_to_tuple(const GroupContext& ctx, const GroupElement& u,
                                  const GroupElement& x0, uint64_t m, uint64_t p);

/// Ground truth by exhaustive search with window-product pruning: for
/// m < n the first m colors force the rest. Returns the first nontrivial
/// verified tuple in enumeration order, or a negative verdict. Throws
/// SearchInfeasibleError when the budget runs out.
Verdict brute_force_search(const GroupContext& ctx, const TorusKnot& knot,
                           const SearchOptions& opts = {});

} // namespace qcolor
