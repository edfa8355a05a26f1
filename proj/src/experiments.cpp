#include "qcolor/experiments.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qcolor/errors.hpp"
#include "qcolor/families.hpp"
#include "qcolor/nt.hpp"
#include "qcolor/serialize.hpp"
#include "qcolor/transforms.hpp"

namespace qcolor {

namespace {

constexpr size_t kMaxListEntries = 100'000;

uint64_t parse_u64(std::string_view token) {
    uint64_t value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

uint64_t single_value(const std::vector<uint64_t>& values, const char* flag) {
    if (values.size() != 1) {
        throw ParseError(std::string("expected a single value for ") + flag);
    }
    return values.front();
}

std::vector<uint64_t> odd_primes_up_to(uint64_t max_p) {
    std::vector<uint64_t> ps;
    for (uint64_t p = 3; p <= max_p; p += 2) {
        if (is_prime(p)) ps.push_back(p);
    }
    return ps;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

void require_report_output(const std::string& output) {
    if (output != "json" && output != "text") {
        throw ParseError("--output must be json or text for this command");
    }
}

GroupContext context_from(const RunConfig& cfg) {
    if (cfg.group.empty()) throw ParseError("missing --group");
    return GroupContext::parse(cfg.group);
}

SearchOptions search_options(const RunConfig& cfg) {
    SearchOptions opts;
    opts.budget = cfg.budget;
    opts.symmetry_reduction = cfg.symmetry_reduction;
    return opts;
}

struct FamilySpec {
    GroupFamily family;
    bool params_from_q;  // GL2/SL2 take --q, dihedral/symmetric take --n
};

FamilySpec family_spec(const std::string& name) {
    if (name == "gl2") return {GroupFamily::GL2, true};
    if (name == "sl2") return {GroupFamily::SL2, true};
    if (name == "dihedral") return {GroupFamily::Dihedral, false};
    if (name == "symmetric") return {GroupFamily::Symmetric, false};
    throw ParseError("unknown family: " + name +
                     " (expected gl2, sl2, dihedral, symmetric, or type4forms)");
}

std::vector<uint64_t> family_params(const RunConfig& cfg, const FamilySpec& spec) {
    const std::vector<uint64_t>& params = spec.params_from_q ? cfg.qs : cfg.ns;
    if (params.empty()) {
        throw ParseError(spec.params_from_q ? "missing --q" : "missing --n");
    }
    return params;
}

uint32_t narrow_param(uint64_t value) {
    if (value == 0 || value > UINT32_MAX) throw ParseError("group parameter out of range");
    return static_cast<uint32_t>(value);
}

// Runs body(i) for i in [0, count) on a bounded pool of worker threads.
// Exceptions are captured per index and the first one is rethrown after all
// workers join, so partial results never escape silently.
template <typename F>
void parallel_for(size_t count, size_t workers, F&& body) {
    if (count == 0) return;
    if (workers == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 2 : std::min<size_t>(hc, 8);
    }
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// One crosscheck cell. Absent verdicts render as empty CSV fields.
struct CrossRow {
    std::string family;
    uint64_t param = 0;
    uint64_t m = 0;
    uint64_t n = 0;
    std::optional<bool> predicate;
    std::optional<bool> criterion;
    std::optional<bool> oracle;
    std::string agree;
    uint64_t runtime_ms = 0;
};

// Agreement policy: with an oracle verdict present, every present verdict
// must match it; without one, the row can at best report "no-oracle", and
// a predicate/criterion split is still a disagreement.
std::string agreement(const std::optional<bool>& predicate,
                      const std::optional<bool>& criterion,
                      const std::optional<bool>& oracle) {
    if (oracle) {
        bool ok = (!criterion || *criterion == *oracle) &&
                  (!predicate || *predicate == *oracle);
        if (predicate && criterion && *predicate != *criterion) ok = false;
        return ok ? "yes" : "DISAGREEMENT";
    }
    if (predicate && criterion && *predicate != *criterion) return "DISAGREEMENT";
    return "no-oracle";
}

void write_cross_row(std::ostream& out, const CrossRow& row) {
    out << row.family << ',' << row.param << ',' << row.m << ',' << row.n << ',';
    if (row.predicate) out << bool_str(*row.predicate);
    out << ',';
    if (row.criterion) out << bool_str(*row.criterion);
    out << ',';
    if (row.oracle) out << bool_str(*row.oracle);
    out << ',' << row.agree << ',' << row.runtime_ms << '\n';
}

int finish_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                      const std::vector<CrossRow>& rows) {
    out << "family,param,m,n,predicate,criterion,oracle,agree,runtime_ms\n";
    size_t disagreements = 0;
    size_t no_oracle = 0;
    for (const CrossRow& row : rows) {
        write_cross_row(out, row);
        if (row.agree == "DISAGREEMENT") ++disagreements;
        if (row.agree == "no-oracle") ++no_oracle;
    }
    err << "crosscheck: " << rows.size() << " rows, " << disagreements
        << " disagreements, " << no_oracle << " without oracle\n";
    return (cfg.strict && disagreements > 0) ? 1 : 0;
}

std::string format_ext(const ExtFieldElement& e) {
    const uint64_t a0 = e.base().value();
    const uint64_t a1 = e.ext().value();
    if (a1 == 0) return std::to_string(a0);
    std::string w = std::to_string(a1) + "w";
    if (a0 == 0) return w;
    return std::to_string(a0) + "+" + w;
}

int run_crosscheck_type4forms(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.qs.empty()) throw ParseError("missing --q");
    constexpr uint64_t kMaxIndex = 12;

    out << "q,a,b,n,recurrence,minus_form,plus_form,minus_agree,plus_agree\n";
    size_t rows = 0;
    size_t plus_misses = 0;
    for (uint64_t qv : cfg.qs) {
        const uint32_t q = narrow_param(qv);
        if (q == 2 || !is_prime(q)) {
            throw ParseError("type4forms requires odd prime q values");
        }
        for (uint32_t av = 1; av < q; ++av) {
            for (uint32_t bv = 0; bv < q; ++bv) {
                const FieldElement a(av, q);
                const FieldElement b(bv, q);
                Matrix2 companion{FieldElement(0, q), FieldElement(1, q), a, b};
                if (classify_gl2(companion) != MatrixType::Irreducible) continue;
                for (uint64_t n = 0; n <= kMaxIndex; ++n) {
                    const FieldElement rec = type4_recurrence(a, b, n).y;
                    const FieldElement minus = type4_yn_closed_form(a, b, n);
                    const ExtFieldElement plus = type4_yn_plus_sign_form(a, b, n);
                    const bool minus_ok = rec == minus;
                    const bool plus_ok = plus.in_base_field() && plus.base() == rec;
                    out << q << ',' << av << ',' << bv << ',' << n << ','
                        << rec.value() << ',' << minus.value() << ','
                        << format_ext(plus) << ',' << (minus_ok ? "yes" : "no")
                        << ',' << (plus_ok ? "yes" : "no") << '\n';
                    ++rows;
                    if (!plus_ok) ++plus_misses;
                }
            }
        }
    }
    err << "type4forms: " << rows << " rows, " << plus_misses
        << " where the plus-sign form leaves the base field or disagrees\n";
    return 0;
}

}  // namespace

std::vector<uint64_t> parse_int_list(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer list");
    std::vector<uint64_t> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string_view token(text.data() + pos, comma - pos);
        if (token.empty()) throw ParseError("empty entry in integer list");
        size_t dots = token.find("..");
        if (dots == std::string_view::npos) {
            values.push_back(parse_u64(token));
        } else {
            const uint64_t lo = parse_u64(token.substr(0, dots));
            const uint64_t hi = parse_u64(token.substr(dots + 2));
            if (lo > hi) throw ParseError("range lower bound exceeds upper bound");
            if (hi - lo + 1 > kMaxListEntries) throw ParseError("integer range too large");
            for (uint64_t v = lo; v <= hi; ++v) values.push_back(v);
        }
        if (values.size() > kMaxListEntries) throw ParseError("integer list too large");
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return values;
}

int run_decide(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    require_report_output(cfg.output);
    GroupContext ctx = context_from(cfg);
    const uint64_t m = single_value(cfg.ms, "--m");
    const uint64_t n = single_value(cfg.ns, "--n");

    Verdict v = decide_general(ctx, m, n);
    if (cfg.output == "text") {
        out << "K(" << m << "," << n << ") over " << ctx.descriptor() << ": "
            << (v.colorable ? "colorable" : "not colorable")
            << " (method " << method_name(v.method);
        for (Caveat c : v.caveats) out << "; " << caveat_name(c);
        out << ")\n";
        if (v.pair_witness) {
            out << "witness: u=" << ctx.format(v.pair_witness->u)
                << " x0=" << ctx.format(v.pair_witness->x0)
                << " p=" << v.pair_witness->p << "\n";
        }
    } else {
        out << verdict_to_json(ctx, v).dump(2) << "\n";
    }
    return v.colorable ? 0 : 1;
}

int run_color(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_report_output(cfg.output);
    GroupContext ctx = context_from(cfg);
    const uint64_t m = single_value(cfg.ms, "--m");
    const uint64_t n = single_value(cfg.ns, "--n");
    TorusKnot knot(m, n);

    Verdict claim = decide_general(ctx, m, n);
    if (!claim.colorable) {
        err << "K(" << m << "," << n << ") over " << ctx.descriptor()
            << " is not colorable";
        if (claim.has_caveat(Caveat::Unknot)) {
            err << " (unknot: only trivial colorings exist)";
        } else {
            err << " (criterion fails at every reduced prime pair)";
        }
        err << "\n";
        return 1;
    }

    // Try the constructed witness on a strand-side prime first; the
    // construction yields a p-strand tuple which then extends to n strands.
    std::optional<ColoringTuple> tuple;
    bool fallback = false;
    for (uint64_t p : distinct_prime_factors(n)) {
        if (p == 2) continue;
        Verdict c = decide_by_criterion(ctx, p);
        if (!c.colorable || !c.pair_witness) continue;
        ConstructedTuple built =
            witness_to_tuple(ctx, c.pair_witness->u, c.pair_witness->x0, m, p);
        if (built.verified) {
            tuple = extend_strands(built.tuple, m, n / p);
            break;
        }
    }

    if (!tuple) {
        fallback = true;
        err << "constructed witness did not verify; falling back to exhaustive search\n";
        try {
            Verdict found = brute_force_search(ctx, knot, search_options(cfg));
            if (!found.colorable) {
                err << "exhaustive search found no nontrivial coloring"
                       " (the criterion's positive claim did not hold here)\n";
                return 1;
            }
            tuple = found.tuple_witness;
        } catch (const SearchInfeasibleError& e) {
            err << "no verified coloring found within budget: " << e.what() << "\n";
            return 1;
        }
    }

    BridgeColors bridges = expand_to_diagram(*tuple, m);
    GroupElement u = harlequin(*tuple, m);
    if (cfg.output == "text") {
        out << "tuple:";
        for (size_t i = 0; i < tuple->size(); ++i) out << ' ' << ctx.format(tuple->at(i));
        out << "\nharlequin: " << ctx.format(u) << "\nbridges:";
        for (const GroupElement& y : bridges) out << ' ' << ctx.format(y);
        out << "\nmethod: " << (fallback ? "bruteforce" : "criterion") << "\n";
    } else {
        nlohmann::json doc;
        doc["tuple"] = tuple_to_json(*tuple);
        doc["harlequin"] = ctx.format(u);
        nlohmann::json ys = nlohmann::json::array();
        for (const GroupElement& y : bridges) ys.push_back(ctx.format(y));
        doc["bridges"] = ys;
        doc["method"] = fallback ? "bruteforce" : "criterion";
        doc["fallback"] = fallback;
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& tuple_path,
               std::ostream& out, std::ostream&) {
    require_report_output(cfg.output);
    GroupContext ctx = context_from(cfg);
    const uint64_t m = single_value(cfg.ms, "--m");

    std::ifstream file(tuple_path);
    if (!file) throw ParseError("cannot open tuple file: " + tuple_path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(file);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("tuple file is not valid JSON: ") + e.what());
    }
    ColoringTuple tuple = tuple_from_json(ctx, doc);
    if (!cfg.ns.empty() && single_value(cfg.ns, "--n") != tuple.size()) {
        throw ShapeMismatchError("shape mismatch: --n disagrees with tuple length");
    }
    TorusKnot knot(m, tuple.size());

    const bool products = verify_tuple_ii(tuple, m);
    const bool shifts = verify_tuple_iii(tuple, m);
    const std::string cls =
        classify_tuple(tuple) == TupleClass::Trivial ? "trivial" : "nontrivial";
    const std::string u = ctx.format(harlequin(tuple, m));

    if (cfg.output == "text") {
        out << "products_condition: " << bool_str(products) << "\n"
            << "harlequin_condition: " << bool_str(shifts) << "\n"
            << "harlequin: " << u << "\n"
            << "classification: " << cls << "\n";
    } else {
        nlohmann::json rep;
        rep["products_condition"] = products;
        rep["harlequin_condition"] = shifts;
        rep["harlequin"] = u;
        rep["classification"] = cls;
        out << rep.dump(2) << "\n";
    }
    return (products && shifts) ? 0 : 1;
}

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.family.empty()) throw ParseError("missing --family");
    const FamilySpec spec = family_spec(cfg.family);
    const std::vector<uint64_t> params = family_params(cfg, spec);
    const std::vector<uint64_t> primes = odd_primes_up_to(cfg.max_p);

    out << "family,param,p,predicate,criterion,agree\n";
    size_t disagreements = 0;
    for (uint64_t param : params) {
        GroupContext ctx(spec.family, narrow_param(param));
        for (uint64_t p : primes) {
            const bool pred = decide_by_predicate(ctx, p).colorable;
            const bool crit = decide_by_criterion(ctx, p).colorable;
            const bool ok = pred == crit;
            if (!ok) ++disagreements;
            out << family_tag(spec.family) << ',' << param << ',' << p << ','
                << bool_str(pred) << ',' << bool_str(crit) << ','
                << (ok ? "yes" : "DISAGREEMENT") << '\n';
        }
    }
    if (disagreements > 0) {
        err << "table: " << disagreements << " disagreements\n";
    }
    return (cfg.strict && disagreements > 0) ? 1 : 0;
}

int run_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.family.empty() && cfg.family == "type4forms") {
        return run_crosscheck_type4forms(cfg, out, err);
    }

    struct Cell {
        GroupFamily family;
        uint32_t param;
        uint64_t m;
        uint64_t n;
        bool with_predicate;
    };
    std::vector<Cell> cells;

    if (!cfg.family.empty()) {
        const FamilySpec spec = family_spec(cfg.family);
        for (uint64_t param : family_params(cfg, spec)) {
            for (uint64_t p : odd_primes_up_to(cfg.max_p)) {
                cells.push_back(Cell{spec.family, narrow_param(param), 2, p, true});
            }
        }
    } else {
        GroupContext ctx = context_from(cfg);
        if (cfg.ms.empty()) throw ParseError("missing --m");
        if (cfg.ns.empty()) throw ParseError("missing --n");
        for (uint64_t m : cfg.ms) {
            for (uint64_t n : cfg.ns) {
                if (m < 1 || n < 1 || std::gcd(m, n) != 1) continue;
                const bool predicate_applies = n > 2 && is_prime(n);
                cells.push_back(Cell{ctx.family(), ctx.param(), m, n, predicate_applies});
            }
        }
    }

    std::vector<CrossRow> rows(cells.size());
    parallel_for(cells.size(), cfg.workers, [&](size_t i) {
        const Cell& cell = cells[i];
        const auto start = std::chrono::steady_clock::now();
        GroupContext ctx(cell.family, cell.param);
        CrossRow row;
        row.family = family_tag(cell.family);
        row.param = cell.param;
        row.m = cell.m;
        row.n = cell.n;
        if (cell.with_predicate) {
            row.predicate = decide_by_predicate(ctx, cell.n).colorable;
        }
        row.criterion = decide_general(ctx, cell.m, cell.n).colorable;
        try {
            TorusKnot knot(cell.m, cell.n);
            row.oracle = brute_force_search(ctx, knot, search_options(cfg)).colorable;
        } catch (const SearchInfeasibleError&) {
            // leave the oracle column empty; agreement becomes "no-oracle"
        }
        row.agree = agreement(row.predicate, row.criterion, row.oracle);
        const auto stop = std::chrono::steady_clock::now();
        row.runtime_ms = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
        rows[i] = std::move(row);
    });

    return finish_crosscheck(cfg, out, err, rows);
}

}  // namespace qcolor
