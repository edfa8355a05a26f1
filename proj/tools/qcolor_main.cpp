#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcolor/errors.hpp"
#include "qcolor/experiments.hpp"

namespace {

struct RawLists {
    std::string m;
    std::string n;
    std::string q;
};

void add_common_flags(CLI::App* cmd, qcolor::RunConfig& cfg, RawLists& raw, bool& no_sym) {
    cmd->add_option("--group", cfg.group,
                    "group descriptor: S:n, D:n, GL2:q, or SL2:q");
    cmd->add_option("--m", raw.m, "twist count; lists like 2,4,7 or 1..7 where supported");
    cmd->add_option("--n", raw.n, "strand count (or D:n/S:n grid parameters); same list syntax");
    cmd->add_option("--family", cfg.family,
                    "grid family: gl2, sl2, dihedral, symmetric, or type4forms");
    cmd->add_option("--q", raw.q, "field sizes for gl2/sl2/type4forms grids; same list syntax");
    cmd->add_option("--max-p", cfg.max_p, "largest odd prime for family grids");
    cmd->add_option("--budget", cfg.budget,
                    "placement budget for exhaustive searches (QC_BUDGET overrides the default)");
    cmd->add_option("--output", cfg.output, "report format: json (default) or text");
    cmd->add_flag("--strict", cfg.strict, "exit nonzero when any row reports DISAGREEMENT");
    cmd->add_flag("--no-symmetry-reduction", no_sym,
                  "search all starting colors instead of one per conjugacy class");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torus knot colorability over conjugation quandles of finite groups"};
    app.require_subcommand(1);

    qcolor::RunConfig cfg;
    RawLists raw;
    bool no_sym = false;
    std::string tuple_path;

    if (const char* env = std::getenv("QC_BUDGET")) {
        try {
            const auto values = qcolor::parse_int_list(env);
            if (values.size() != 1) throw qcolor::ParseError("QC_BUDGET must be a single integer");
            cfg.budget = values.front();
        } catch (const std::exception& e) {
            std::cerr << "error: bad QC_BUDGET: " << e.what() << "\n";
            return 2;
        }
    }

    CLI::App* decide = app.add_subcommand("decide", "decide whether K(m,n) is colorable");
    CLI::App* color = app.add_subcommand("color", "produce a verified coloring with bridges");
    CLI::App* verify = app.add_subcommand("verify", "check a tuple file against K(m,n)");
    CLI::App* table = app.add_subcommand("table", "predicate vs criterion CSV over a family grid");
    CLI::App* crosscheck =
        app.add_subcommand("crosscheck", "predicate/criterion/oracle agreement CSV");
    for (CLI::App* cmd : {decide, color, verify, table, crosscheck}) {
        add_common_flags(cmd, cfg, raw, no_sym);
    }
    verify->add_option("tuple", tuple_path, "JSON file with an array of element strings")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.symmetry_reduction = !no_sym;
        if (!raw.m.empty()) cfg.ms = qcolor::parse_int_list(raw.m);
        if (!raw.n.empty()) cfg.ns = qcolor::parse_int_list(raw.n);
        if (!raw.q.empty()) cfg.qs = qcolor::parse_int_list(raw.q);

        if (app.got_subcommand(decide)) return qcolor::run_decide(cfg, std::cout, std::cerr);
        if (app.got_subcommand(color)) return qcolor::run_color(cfg, std::cout, std::cerr);
        if (app.got_subcommand(verify)) {
            return qcolor::run_verify(cfg, tuple_path, std::cout, std::cerr);
        }
        if (app.got_subcommand(table)) return qcolor::run_table(cfg, std::cout, std::cerr);
        if (app.got_subcommand(crosscheck)) {
            return qcolor::run_crosscheck(cfg, std::cout, std::cerr);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
