#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcolor/coloring.hpp"

namespace qcolor {

// Parses "5", "2,4,7", "3..6", and mixtures like "1,4..6" into the expanded
// list, preserving order. Throws ParseError on malformed input.
std::vector<uint64_t> parse_int_list(const std::string& text);

// Shared configuration for the experiment runners. The runners read only the
// fields they need; list fields hold the parsed --m/--n/--q values.
struct RunConfig {
    std::string group;            // group descriptor, e.g. "S:3"
    std::string family;           // "gl2", "sl2", "dihedral", "symmetric", "type4forms"
    std::vector<uint64_t> ms;
    std::vector<uint64_t> ns;
    std::vector<uint64_t> qs;
    uint64_t max_p = 13;
    uint64_t budget = kDefaultBudget;
    std::string output = "json";  // "json" or "text"; table and crosscheck always emit CSV
    uint64_t seed = 0;            // reserved for sampled property runs
    bool strict = false;
    bool symmetry_reduction = true;
    std::size_t workers = 0;      // 0 picks a bounded default
};

// Each runner writes its report to `out`, diagnostics to `err`, and returns
// the process exit code: 0 for a positive/clean result, 1 for a negative or
// flagged result, while errors are thrown and mapped to 2 by the caller.

// Decides K(m,n) over the configured group and prints the verdict.
int run_decide(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Produces a verified coloring tuple with its harlequin and bridge colors,
// falling back to the exhaustive search when the constructed witness does
// not verify. Exit 1 when no verified coloring is found.
int run_color(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Checks a tuple file (JSON array of element strings) against K(m,n) and
// reports both characterization conditions, the harlequin, and whether the
// tuple is trivial.
int run_verify(const RunConfig& cfg, const std::string& tuple_path,
               std::ostream& out, std::ostream& err);

// Emits the predicate-vs-criterion CSV over a family grid.
int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Emits the predicate/criterion/oracle agreement CSV. With --group it sweeps
// the (m, n) grid; with a family it sweeps (param, odd prime p) using K(2,p);
// with family "type4forms" it emits the recurrence vs. closed-form table.
int run_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qcolor
