#include "qcolor/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "qcolor/nt.hpp"

namespace qcolor {

namespace {

constexpr uint64_t kMaxStrandsInMemory = 1'000'000;
constexpr uint64_t kMaxDiagramBridges = 10'000'000;

void require_knot(uint64_t m, uint64_t n) {
    if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw LinkParametersError("link parameters");
}

/// Product of the m consecutive colors starting at index `start` (mod n).
GroupElement window_product(const GroupContext& ctx, const std::vector<GroupElement>& xs,
                            uint64_t m, size_t start) {
    const size_t n = xs.size();
    const uint64_t a = m / n;
    const size_t r = static_cast<size_t>(m % n);
    GroupElement acc = ctx.identity();
    if (a > 0) {
        GroupElement cyc = ctx.identity();
        size_t idx = start;
        for (size_t j = 0; j < n; ++j) {
            cyc = ctx.mul(cyc, xs[idx]);
            idx = idx + 1 == n ? 0 : idx + 1;
        }
        acc = ctx.power(cyc, a);
    }
    size_t idx = start;
    for (size_t j = 0; j < r; ++j) {
        acc = ctx.mul(acc, xs[idx]);
        idx = idx + 1 == n ? 0 : idx + 1;
    }
    return acc;
}

bool windows_all_equal(const GroupContext& ctx, const std::vector<GroupElement>& xs, uint64_t m) {
    const size_t n = xs.size();
    const size_t r = static_cast<size_t>(m % n);
    const GroupElement p0 = window_product(ctx, xs, m, 0);
    GroupElement cur = p0;
    for (size_t i = 0; i + 1 < n; ++i) {
        // dropping x_i on the left and appending x_{i+m} yields the next window
        cur = ctx.mul(ctx.mul(ctx.inverse(xs[i]), cur), xs[(i + r) % n]);
        if (!(cur == p0)) return false;
    }
    return true;
}

bool shift_by_harlequin_holds(const GroupContext& ctx, const std::vector<GroupElement>& xs,
                              uint64_t m) {
    const size_t n = xs.size();
    const size_t r = static_cast<size_t>(m % n);
    const GroupElement u = window_product(ctx, xs, m, (n - r) % n);
    const GroupElement ui = ctx.inverse(u);
    for (size_t i = 0; i < n; ++i) {
        if (!(ctx.mul(ctx.mul(u, xs[i]), ui) == xs[(i + n - r) % n])) return false;
    }
    return true;
}

bool all_equal(const std::vector<GroupElement>& xs) {
    return std::all_of(xs.begin(), xs.end(), [&](const GroupElement& e) { return e == xs.front(); });
}

} // namespace

TorusKnot::TorusKnot(uint64_t m_, uint64_t n_) : m(m_), n(n_) {
    require_knot(m, n);
}

ColoringTuple::ColoringTuple(GroupContext ctx, std::vector<GroupElement> colors)
    : ctx_(ctx), colors_(std::move(colors)) {
    if (colors_.empty()) throw ShapeMismatchError("shape mismatch: empty tuple");
    for (const GroupElement& e : colors_) ctx_.require_member(e);
}

GroupElement harlequin(const ColoringTuple& tuple, uint64_t m) {
    const size_t n = tuple.size();
    require_knot(m, n);
    const size_t r = static_cast<size_t>(m % n);
    return window_product(tuple.context(), tuple.colors(), m, (n - r) % n);
}

bool verify_tuple_ii(const ColoringTuple& tuple, uint64_t m) {
    require_knot(m, tuple.size());
    return windows_all_equal(tuple.context(), tuple.colors(), m);
}

bool verify_tuple_iii(const ColoringTuple& tuple, uint64_t m) {
    require_knot(m, tuple.size());
    return shift_by_harlequin_holds(tuple.context(), tuple.colors(), m);
}

BridgeColors expand_to_diagram(const ColoringTuple& tuple, uint64_t m) {
    require_knot(m, tuple.size());
    if (m > kMaxDiagramBridges) throw SearchInfeasibleError("search infeasible: too many bridges");
    if (!verify_tuple_iii(tuple, m)) throw NotAColoringError("tuple does not color K(m,n)");

    const GroupContext& ctx = tuple.context();
    const std::vector<GroupElement>& xs = tuple.colors();
    const size_t n = xs.size();

    BridgeColors ys;
    ys.reserve(static_cast<size_t>(m));
    // stack = y_{j-1} * ... * y_0; folding |> over y_0..y_{j-1} conjugates by it
    GroupElement stack = ctx.identity();
    for (uint64_t j = 0; j < m; ++j) {
        GroupElement y = quandle_op(ctx, xs[static_cast<size_t>(j % n)], stack);
        ys.push_back(y);
        stack = ctx.mul(y, stack);
    }

    const size_t r = static_cast<size_t>(m % n);
    const GroupElement si = ctx.inverse(stack);
    for (size_t i = 0; i < n; ++i) {
        if (!(ctx.mul(ctx.mul(stack, xs[i]), si) == xs[(i + n - r) % n])) {
            throw Error("internal error: bridge colors do not close the diagram");
        }
    }
    return ys;
}

TupleClass classify_tuple(const ColoringTuple& tuple) {
    return all_equal(tuple.colors()) ? TupleClass::Trivial : TupleClass::Nontrivial;
}

void Verdict::add_caveat(Caveat c) {
    if (!has_caveat(c)) caveats.push_back(c);
}

bool Verdict::has_caveat(Caveat c) const {
    return std::find(caveats.begin(), caveats.end(), c) != caveats.end();
}

Verdict decide_by_criterion(const GroupContext& ctx, uint64_t p) {
    if (!is_prime(p)) throw MathDomainError("p must be prime");
    GrowthWitness w = criterion_growth_search(ctx, p);
    Verdict v;
    v.method = Method::Criterion;
    v.colorable = w.grows;
    if (w.grows) v.pair_witness = PairWitness{*w.u, *w.x, p};
    v.add_caveat(Caveat::SufficiencyUnverified);
    if (p == 2) v.add_caveat(Caveat::P2Experimental);
    return v;
}

ConstructedTuple witness_to_tuple(const GroupContext& ctx, const GroupElement& u,
                                  const GroupElement& x0, uint64_t m, uint64_t p) {
    if (m < 1 || p < 1 || std::gcd(m, p) != 1) throw LinkParametersError("link parameters");
    if (p > kMaxStrandsInMemory) throw SearchInfeasibleError("search infeasible: too many strands");
    ctx.require_member(u);
    ctx.require_member(x0);

    const size_t np = static_cast<size_t>(p);
    const size_t r = static_cast<size_t>(m % p);
    std::vector<GroupElement> xs(np, ctx.identity());
    GroupElement cur = x0;
    size_t idx = 0;
    for (size_t i = 0; i < np; ++i) {
        xs[idx] = cur;
        idx = (idx + np - r) % np;
        cur = quandle_op(ctx, cur, u);
    }
    ColoringTuple tuple(ctx, std::move(xs));
    bool ok = verify_tuple_iii(tuple, m);
    return ConstructedTuple{std::move(tuple), ok};
}

namespace {

/// Depth-first search over initial-arc colors. Every placed color counts
/// against the budget, forced placements included.
class OracleSearch {
public:
    OracleSearch(const GroupContext& ctx, const TorusKnot& knot, const SearchOptions& opts)
        : ctx_(ctx), m_(knot.m), n_(static_cast<size_t>(knot.n)), budget_(opts.budget) {
        if (knot.n > kMaxStrandsInMemory || knot.n > budget_) {
            throw SearchInfeasibleError("search infeasible");
        }
        pool_ = ctx_.elements();
        x0_candidates_ = opts.symmetry_reduction ? conjugacy_representatives(ctx_) : pool_;
        xs_.assign(n_, ctx_.identity());
        free_ = static_cast<size_t>(std::min<uint64_t>(m_, n_));
        prefix_.assign(free_ + 1, ctx_.identity());
    }

    std::optional<std::vector<GroupElement>> run() {
        if (ctx_.order() == 1) return std::nullopt; // only the trivial coloring exists
        if (descend(0)) return xs_;
        return std::nullopt;
    }

private:
    void charge() {
        if (++used_ > budget_) throw SearchInfeasibleError("search infeasible");
    }

    bool descend(size_t d) {
        if (d == free_) return m_ < n_ ? complete_forced() : leaf_check();
        const std::vector<GroupElement>& cands = d == 0 ? x0_candidates_ : pool_;
        for (const GroupElement& e : cands) {
            charge();
            xs_[d] = e;
            prefix_[d + 1] = ctx_.mul(prefix_[d], e);
            if (descend(d + 1)) return true;
        }
        return false;
    }

    /// m < n: the window value u is fixed by the prefix and every further
    /// color is forced by equality of consecutive windows; the wrapped
    /// steps of the chain become consistency checks.
    bool complete_forced() {
        const GroupElement& u = prefix_[free_];
        const GroupElement ui = ctx_.inverse(u);
        const size_t mr = static_cast<size_t>(m_ % n_);
        size_t cur = 0;
        for (size_t step = 0; step < n_; ++step) {
            const size_t nxt = (cur + mr) % n_;
            GroupElement val = ctx_.mul(ctx_.mul(ui, xs_[cur]), u);
            if (nxt < free_) {
                if (!(xs_[nxt] == val)) return false;
            } else {
                charge();
                xs_[nxt] = val;
            }
            cur = nxt;
        }
        return accept();
    }

    /// m >= n: all n colors are chosen, check the windows directly using
    /// the maintained prefix products.
    bool leaf_check() {
        const size_t r = static_cast<size_t>(m_ % n_);
        GroupElement p0 = ctx_.mul(ctx_.power(prefix_[n_], m_ / n_), prefix_[r]);
        GroupElement cur = p0;
        for (size_t i = 0; i + 1 < n_; ++i) {
            cur = ctx_.mul(ctx_.mul(ctx_.inverse(xs_[i]), cur), xs_[(i + r) % n_]);
            if (!(cur == p0)) return false;
        }
        return accept();
    }

    bool accept() const { return !all_equal(xs_); }

    const GroupContext& ctx_;
    uint64_t m_;
    size_t n_;
    uint64_t budget_;
    uint64_t used_ = 0;
    size_t free_ = 0;
    std::vector<GroupElement> pool_;
    std::vector<GroupElement> x0_candidates_;
    std::vector<GroupElement> xs_;
    std::vector<GroupElement> prefix_;
};

} // namespace

Verdict brute_force_search(const GroupContext& ctx, const TorusKnot& knot,
                           const SearchOptions& opts) {
    OracleSearch search(ctx, knot, opts);
    std::optional<std::vector<GroupElement>> found = search.run();

    Verdict v;
    v.method = Method::BruteForce;
    v.colorable = found.has_value();
    if (found) {
        if (!windows_all_equal(ctx, *found, knot.m) || !shift_by_harlequin_holds(ctx, *found, knot.m)) {
            throw Error("internal error: search produced an invalid tuple");
        }
        v.tuple_witness = ColoringTuple(ctx, std::move(*found));
    }
    return v;
}

} // namespace qcolor
