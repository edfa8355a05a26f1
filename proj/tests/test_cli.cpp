#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "qcolor/coloring.hpp"
#include "qcolor/serialize.hpp"

using nlohmann::json;

namespace {

std::string bin_path() {
    if (const char* env = std::getenv("QCOLOR_BIN")) return env;
    return QCOLOR_BIN_PATH;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& prefix = "") {
    const std::string cmd = prefix + bin_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        if (nl > pos) lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    size_t pos = 0;
    for (;;) {
        size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

}  // namespace

TEST_CASE("decide reports a JSON verdict with exit code 0") {
    RunResult r = run_cli("decide --group S:3 --m 2 --n 3");
    CHECK(r.exit_code == 0);
    json v = json::parse(r.out);
    CHECK(v["colorable"] == true);
    CHECK(v["method"] == "reduction");
    CHECK(v["witness"]["u"] == "(1 2 3)");
    CHECK(v["witness"]["x0"] == "(2 3)");
    CHECK(v["prime_pair"] == json::array({2, 3}));
    CHECK(v["caveats"] == json::array({"SUFFICIENCY_UNVERIFIED"}));
}

TEST_CASE("decide exit codes separate verdicts from errors") {
    CHECK(run_cli("decide --group S:3 --m 2 --n 5").exit_code == 1);
    CHECK(run_cli("decide --group S:3 --m 2 --n 4").exit_code == 2);   // torus link
    CHECK(run_cli("decide --group X:3 --m 2 --n 3").exit_code == 2);
    CHECK(run_cli("decide --m 2 --n 3").exit_code == 2);               // no group
    CHECK(run_cli("decide --group S:3 --m 2 --n 3 --output csv").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("decide text output") {
    RunResult r = run_cli("decide --group S:3 --m 2 --n 3 --output text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("colorable") != std::string::npos);
    CHECK(r.out.find("SUFFICIENCY_UNVERIFIED") != std::string::npos);
}

TEST_CASE("decide flags the unknot") {
    RunResult r = run_cli("decide --group S:3 --m 1 --n 5");
    CHECK(r.exit_code == 1);
    json v = json::parse(r.out);
    CHECK(v["caveats"] == json::array({"UNKNOT"}));
}

TEST_CASE("color emits the verified book tuple for K(2,3)") {
    RunResult r = run_cli("color --group S:3 --m 2 --n 3");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["tuple"] == json::array({"(2 3)", "(1 2)", "(1 3)"}));
    CHECK(doc["harlequin"] == "(1 2 3)");
    CHECK(doc["bridges"] == json::array({"(2 3)", "(1 3)"}));
    CHECK(doc["method"] == "criterion");
    CHECK(doc["fallback"] == false);

    // independently re-verify the emitted coloring
    qcolor::GroupContext s3 = qcolor::GroupContext::parse("S:3");
    qcolor::ColoringTuple tuple = qcolor::tuple_from_json(s3, doc["tuple"]);
    CHECK(qcolor::verify_tuple_ii(tuple, 2));
    CHECK(qcolor::verify_tuple_iii(tuple, 2));
}

TEST_CASE("color extends to nine strands") {
    RunResult r = run_cli("color --group S:3 --m 2 --n 9");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["tuple"].size() == 9);
    qcolor::GroupContext s3 = qcolor::GroupContext::parse("S:3");
    qcolor::ColoringTuple tuple = qcolor::tuple_from_json(s3, doc["tuple"]);
    CHECK(qcolor::verify_tuple_iii(tuple, 2));
    CHECK(qcolor::classify_tuple(tuple) == qcolor::TupleClass::Nontrivial);
}

TEST_CASE("color reports failure honestly") {
    // K(2,5) is refused outright; K(5,3) is claimed by the criterion but the
    // fallback search refutes it, so no coloring can be emitted
    CHECK(run_cli("color --group S:3 --m 2 --n 5").exit_code == 1);
    CHECK(run_cli("color --group S:3 --m 5 --n 3").exit_code == 1);
}

TEST_CASE("verify checks a tuple file") {
    const std::string path = "/tmp/qcolor_cli_tuple.json";
    {
        std::ofstream f(path);
        f << R"doc(["(2 3)", "(1 2)", "(1 3)"])doc";
    }
    RunResult good = run_cli("verify --group S:3 --m 2 " + path);
    CHECK(good.exit_code == 0);
    json rep = json::parse(good.out);
    CHECK(rep["products_condition"] == true);
    CHECK(rep["harlequin_condition"] == true);
    CHECK(rep["harlequin"] == "(1 2 3)");
    CHECK(rep["classification"] == "nontrivial");

    RunResult bad = run_cli("verify --group S:3 --m 5 " + path);
    CHECK(bad.exit_code == 1);
    json rep2 = json::parse(bad.out);
    CHECK(rep2["products_condition"] == false);
    CHECK(rep2["harlequin_condition"] == false);

    CHECK(run_cli("verify --group S:3 --m 2 --n 4 " + path).exit_code == 2);
    CHECK(run_cli("verify --group S:3 --m 2 /tmp/qcolor_missing.json").exit_code == 2);

    const std::string broken = "/tmp/qcolor_cli_broken.json";
    {
        std::ofstream f(broken);
        f << "not json";
    }
    CHECK(run_cli("verify --group S:3 --m 2 " + broken).exit_code == 2);
}

TEST_CASE("table emits the dihedral grid") {
    RunResult r = run_cli("table --family dihedral --n 3..8 --max-p 13");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1 + 6 * 5);  // header + params 3..8 x primes {3,5,7,11,13}
    CHECK(lines[0] == "family,param,p,predicate,criterion,agree");
    for (size_t i = 1; i < lines.size(); ++i) {
        auto f = fields_of(lines[i]);
        REQUIRE(f.size() == 6);
        CHECK(f[0] == "D");
        CHECK(f[3] == f[4]);
        CHECK(f[5] == "yes");
    }
}

TEST_CASE("table handles matrix families") {
    RunResult r = run_cli("table --family gl2 --q 2,3 --max-p 7");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1 + 2 * 3);
    for (size_t i = 1; i < lines.size(); ++i) {
        auto f = fields_of(lines[i]);
        CHECK(f[0] == "GL2");
        CHECK(f[5] == "yes");
    }
    CHECK(run_cli("table --family gl2 --max-p 7").exit_code == 2);  // missing --q
}

TEST_CASE("crosscheck surfaces the criterion gap on K(m,3) over S3") {
    RunResult r = run_cli("crosscheck --group S:3 --m 2,4,5,7 --n 3");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "family,param,m,n,predicate,criterion,oracle,agree,runtime_ms");
    for (size_t i = 1; i < lines.size(); ++i) {
        auto f = fields_of(lines[i]);
        REQUIRE(f.size() == 9);
        CHECK(f[0] == "S");
        CHECK(f[1] == "3");
        CHECK(f[3] == "3");
        const std::string m = f[2];
        if (m == "2" || m == "4") {
            CHECK(f[5] == "true");
            CHECK(f[6] == "true");
            CHECK(f[7] == "yes");
        } else {
            CHECK(f[5] == "true");   // criterion claims these
            CHECK(f[6] == "false");  // the oracle refutes them
            CHECK(f[7] == "DISAGREEMENT");
        }
    }

    CHECK(run_cli("crosscheck --group S:3 --m 2,4,5,7 --n 3 --strict").exit_code == 1);
}

TEST_CASE("crosscheck family mode uses K(2,p) cells") {
    RunResult r = run_cli("crosscheck --family symmetric --n 3,4 --max-p 5");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    for (size_t i = 1; i < lines.size(); ++i) {
        auto f = fields_of(lines[i]);
        CHECK(f[0] == "S");
        CHECK(f[2] == "2");
        CHECK(f[7] == "yes");
    }
}

TEST_CASE("crosscheck type4forms compares the closed forms") {
    RunResult r = run_cli("crosscheck --family type4forms --q 3");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1 + 3 * 13);  // 3 irreducible pairs, n = 0..12
    CHECK(lines[0] == "q,a,b,n,recurrence,minus_form,plus_form,minus_agree,plus_agree");
    bool saw_plus_miss = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto f = fields_of(lines[i]);
        REQUIRE(f.size() == 9);
        CHECK(f[7] == "yes");
        if (f[8] == "no") saw_plus_miss = true;
    }
    CHECK(saw_plus_miss);
    CHECK(run_cli("crosscheck --family type4forms --q 2").exit_code == 2);
}

TEST_CASE("budget control via QC_BUDGET and --budget") {
    RunResult starved = run_cli("crosscheck --group S:3 --m 2 --n 3", "QC_BUDGET=3 ");
    CHECK(starved.exit_code == 0);
    auto lines = lines_of(starved.out);
    REQUIRE(lines.size() == 2);
    auto f = fields_of(lines[1]);
    CHECK(f[6] == "");
    CHECK(f[7] == "no-oracle");

    RunResult restored =
        run_cli("crosscheck --group S:3 --m 2 --n 3 --budget 100000", "QC_BUDGET=3 ");
    auto f2 = fields_of(lines_of(restored.out)[1]);
    CHECK(f2[6] == "true");
    CHECK(f2[7] == "yes");

    CHECK(run_cli("decide --group S:3 --m 2 --n 3", "QC_BUDGET=junk ").exit_code == 2);
}

TEST_CASE("symmetry reduction flag is accepted") {
    RunResult r = run_cli("decide --group S:3 --m 2 --n 3 --no-symmetry-reduction");
    CHECK(r.exit_code == 0);
}
