#include <doctest.h>

#include "leibcoh/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

using namespace leibcoh;
using nlohmann::json;

namespace {

const std::string kDataDir = LEIBCOH_DATA_DIR;

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// stable scratch path; overwritten per use
std::string write_temp_algebra(const json& j) {
    std::string path = "/tmp/leibcoh_cli_test.json";
    std::ofstream f(path);
    f << j.dump(2) << "\n";
    return path;
}

} // namespace

TEST_CASE("report header: command echo, fingerprint, convention") {
    CliResult r = run_cli({"check", "--algebra", "n3"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.empty());
    std::vector<std::string> ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "command: check --algebra n3");
    CHECK(ls[1] == "fingerprint: 0277a34c65256b7a");
    CHECK(ls[2] ==
          "convention: [ei,ej] = sum_k c(i,j,k) ek, 1-based indices; "
          "lie cochains live on increasing tuples");
    CHECK(ls[3] == "Lie: yes, Leibniz: yes");
}

TEST_CASE("check verdict lines") {
    CliResult leib_only = run_cli({"check", "--algebra", "lambda2"});
    REQUIRE(leib_only.exit_code == 0);
    CHECK(lines(leib_only.out).back() ==
          "Lie: no (antisymmetry fails at (1,1)), Leibniz: yes");

    json bad = {
        {"dim", 2},
        {"brackets", {{{"i", 1}, {"j", 2}, {"terms", {{{"k", 2}, {"c", "1"}}}}}}},
    };
    CliResult neither = run_cli({"check", "--algebra-file", write_temp_algebra(bad)});
    REQUIRE(neither.exit_code == 0);
    std::string verdict = lines(neither.out).back();
    CHECK(contains(verdict, "Lie: no"));
    CHECK(contains(verdict, "Leibniz: no (identity fails at (1,1,2))"));
}

TEST_CASE("cohomology dimension lines") {
    struct Row {
        std::vector<std::string> args;
        std::string theory_line;
        std::string dims_line;
    };
    const Row rows[] = {
        {{"cohomology", "--algebra", "n3", "--theory", "leibniz", "--degree", "2"},
         "theory: leibniz, degree: 2", "Z=11 B=3 H=8"},
        {{"cohomology", "--algebra", "n3", "--theory", "lie", "--degree", "2"},
         "theory: lie, degree: 2", "Z=8 B=3 H=5"},
        {{"cohomology", "--algebra", "n3", "--theory", "lie", "--degree", "3"},
         "theory: lie, degree: 3", "Z=3 B=1 H=2"},
        {{"cohomology", "--algebra", "sl2", "--theory", "lie", "--degree", "2"},
         "theory: lie, degree: 2", "Z=6 B=6 H=0"},
    };
    for (const Row& row : rows) {
        CliResult r = run_cli(row.args);
        REQUIRE(r.exit_code == 0);
        std::vector<std::string> ls = lines(r.out);
        REQUIRE(ls.size() == 5);
        CHECK(ls[3] == row.theory_line);
        CHECK(ls[4] == row.dims_line);
    }
}

TEST_CASE("cohomology representatives block") {
    CliResult r = run_cli(
        {"cohomology", "--algebra", "n3", "--theory", "lie", "--degree", "2", "--reps"});
    REQUIRE(r.exit_code == 0);
    std::vector<std::string> ls = lines(r.out);
    REQUIRE(ls.size() == 11);
    CHECK(ls[5] == "representatives:");
    CHECK(ls[6] == "  phi_1(e1,e2) = e2, phi_1(e1,e3) = -e3");
    CHECK(ls[7] == "  phi_2(e1,e2) = e3");
    CHECK(ls[8] == "  phi_3(e1,e3) = e2");
    CHECK(ls[9] == "  phi_4(e2,e3) = e2");
    CHECK(ls[10] == "  phi_5(e2,e3) = e3");
}

TEST_CASE("versal output, lie theory, full text") {
    CliResult r = run_cli({"versal", "--algebra", "n3", "--theory", "lie"});
    REQUIRE(r.exit_code == 0);
    const std::string expected =
        "command: versal --algebra n3 --theory lie\n"
        "fingerprint: 0277a34c65256b7a\n"
        "convention: [ei,ej] = sum_k c(i,j,k) ek, 1-based indices; "
        "lie cochains live on increasing tuples\n"
        "cocycle basis: pinned fixture\n"
        "parameters: t1 t2 t3 t4 t5\n"
        "brackets:\n"
        "  [e1,e1] = 0\n"
        "  [e1,e2] = (t2 + t1*t4) e2 + t3 e3\n"
        "  [e1,e3] = t4 e1 + t5 e2 - t2 e3\n"
        "  [e2,e1] = (-t2 - t1*t4) e2 - t3 e3\n"
        "  [e2,e2] = 0\n"
        "  [e2,e3] = e1 + t1 e3\n"
        "  [e3,e1] = -t4 e1 - t5 e2 + t2 e3\n"
        "  [e3,e2] = -e1 - t1 e3\n"
        "  [e3,e3] = 0\n"
        "relations:\n"
        "  t1*t2 - t3*t4\n"
        "  t1*t5 + t2*t4\n"
        "corrections:\n"
        "  (1,4): chi(e1,e2) = e2\n"
        "note: truncated at second order; higher-order obstructions not computed\n";
    CHECK(r.out == expected);
}

TEST_CASE("versal output, leibniz theory, key sections") {
    CliResult r = run_cli({"versal", "--algebra", "n3", "--theory", "leibniz"});
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "parameters: t1 t2 t3 t4 t5 t6 t7 t8\n"));
    CHECK(contains(r.out, "  [e2,e3] = e1 - t4*t7 e2 + t1 e3\n"));
    CHECK(contains(r.out, "  [e3,e2] = (t7 - 1) e1 - t1 e3\n"));
    CHECK(contains(r.out,
                   "relations:\n"
                   "  t1*t2 - t3*t4\n"
                   "  t1*t5 + t2*t4\n"
                   "  t2*t6\n"
                   "  t2*t7\n"
                   "  t2*t8\n"
                   "  t3*t6\n"
                   "  t3*t7\n"
                   "  t3*t8\n"
                   "  t5*t6\n"
                   "  t5*t7\n"
                   "  t5*t8\n"));
    CHECK(contains(r.out, "  (1,4): chi(e1,e2) = e2, chi(e2,e1) = -e2\n"));
    CHECK(contains(r.out, "note: truncated at second order"));
}

TEST_CASE("versal omits the truncation note when the base is smooth") {
    // all of H^2 unobstructed: the abelian algebra
    CliResult r = run_cli({"versal", "--algebra", "lambda1", "--theory", "lie"});
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "cocycle basis: engine canonical"));
    CHECK(contains(r.out, "parameters: t1 t2 t3 t4 t5 t6 t7 t8 t9\n"));
    CHECK(contains(r.out, "relations:\n  t1*t5 - t2*t4 - t5*t9 + t6*t8\n"));
    CHECK(contains(r.out, "note: truncated at second order"));

    CliResult sl2 = run_cli({"versal", "--algebra", "sl2", "--theory", "lie"});
    REQUIRE(sl2.exit_code == 0);
    CHECK(contains(sl2.out, "parameters: (none)\n"));
    CHECK(contains(sl2.out, "relations:\n  (none)\n"));
    CHECK_FALSE(contains(sl2.out, "note:"));
}

TEST_CASE("massey summary lines") {
    CliResult lie = run_cli({"massey", "--algebra", "n3", "--theory", "lie"});
    REQUIRE(lie.exit_code == 0);
    CHECK(contains(lie.out, "parameters: 5\n"));
    CHECK_FALSE(contains(lie.out, "pairs:\n"));
    CHECK(contains(lie.out, "obstructed pairs: (1,2) (1,5) (2,4) (3,4)\n"));
    CHECK(contains(lie.out, "corrected pairs: (1,4)\n"));
    CHECK(contains(lie.out,
                   "relations:\n"
                   "  t1*t2 - t3*t4\n"
                   "  t1*t5 + t2*t4\n"));

    CliResult paired = run_cli({"massey", "--algebra", "n3", "--theory", "lie", "--pairs"});
    REQUIRE(paired.exit_code == 0);
    CHECK(contains(paired.out, "pairs:\n"));
    CHECK(contains(paired.out, "  (1,2): obstructed\n"));
    CHECK(contains(paired.out, "  (1,4): coboundary\n"));
    CHECK(contains(paired.out, "  (1,3): zero\n"));

    CliResult leib = run_cli({"massey", "--algebra", "n3", "--theory", "leibniz"});
    REQUIRE(leib.exit_code == 0);
    CHECK(contains(leib.out,
                   "obstructed pairs: (1,2) (1,5) (2,4) (2,6) (2,7) (2,8) "
                   "(3,4) (3,6) (3,7) (3,8) (5,6) (5,7) (5,8)\n"));
    CHECK(contains(leib.out, "corrected pairs: (1,4) (1,7) (1,8) (4,6) (4,7) (4,8)\n"));

    CliResult abelian = run_cli({"massey", "--algebra", "lambda1", "--theory", "lie"});
    REQUIRE(abelian.exit_code == 0);
    CHECK(contains(abelian.out,
                   "obstructed pairs: (1,5) (1,6) (1,8) (2,4) (2,7) (2,9) "
                   "(3,4) (3,8) (4,9) (5,9) (6,7) (6,8)\n"));
    CHECK(contains(abelian.out, "corrected pairs: (none)\n"));

    CliResult rigid = run_cli({"massey", "--algebra", "sl2", "--theory", "lie"});
    REQUIRE(rigid.exit_code == 0);
    CHECK(contains(rigid.out, "parameters: 0\n"));
    CHECK(contains(rigid.out, "obstructed pairs: (none)\n"));
}

TEST_CASE("classify text reports") {
    CliResult lie = run_cli({"classify", "--algebra", "n3"});
    REQUIRE(lie.exit_code == 0);
    CHECK(contains(lie.out, "class: n3 (Heisenberg)\n"));
    CHECK(contains(lie.out, "derived dim: 1, center dim: 1\n"));

    CliResult fam = run_cli({"classify", "--algebra", "lambda4", "--param", "1"});
    REQUIRE(fam.exit_code == 0);
    CHECK(contains(fam.out, "class: lambda4 family, j = 3\n"));
    CHECK(contains(fam.out, "lcs: [3, 1, 0]\n"));
    CHECK(contains(fam.out, "lie: no\n"));
    CHECK(contains(fam.out, "form ranks: sym 2, antisym 2\n"));

    CliResult file = run_cli({"classify", "--algebra-file", kDataDir + "/f2_deformed_t1.json"});
    REQUIRE(file.exit_code == 0);
    CHECK(contains(file.out, "class: sl2\n"));
    CHECK(contains(file.out, "derived dim: 3, center dim: 0\n"));
}

TEST_CASE("builtin and file input agree") {
    CliResult a = run_cli({"cohomology", "--algebra", "n3", "--theory", "leibniz", "--degree", "2"});
    CliResult b = run_cli({"cohomology", "--algebra-file", kDataDir + "/n3.json", "--theory",
                           "leibniz", "--degree", "2"});
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    // same fingerprint and same result lines; only the command echo differs
    std::vector<std::string> la = lines(a.out), lb = lines(b.out);
    REQUIRE(la.size() == lb.size());
    for (std::size_t i = 1; i < la.size(); ++i) CHECK(la[i] == lb[i]);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args = {"versal", "--algebra", "n3", "--theory", "leibniz"};
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
}

TEST_CASE("json mode emits a parseable document") {
    CliResult r = run_cli(
        {"cohomology", "--algebra", "n3", "--theory", "leibniz", "--degree", "1", "--json"});
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "cohomology --algebra n3 --theory leibniz --degree 1 --json");
    CHECK(doc["fingerprint"] == "0277a34c65256b7a");
    CHECK(doc["theory"] == "leibniz");
    CHECK(doc["degree"] == 1);
    CHECK(doc["dim_Z"] == 6);
    CHECK(doc["dim_B"] == 2);
    CHECK(doc["dim_H"] == 4);
    CHECK(r.out == doc.dump(2) + "\n"); // canonical serialization round-trips

    json chk = json::parse(run_cli({"check", "--algebra", "lambda2", "--json"}).out);
    CHECK(chk["lie_ok"] == false);
    CHECK(chk["leibniz_ok"] == true);
    CHECK(chk["antisymmetry_ok"] == false);
    CHECK(chk["first_antisymmetry_failure"] == json::array({1, 1}));
    CHECK(chk["first_leibniz_failure"].is_null());

    json ver = json::parse(run_cli({"versal", "--algebra", "n3", "--theory", "lie", "--json"}).out);
    CHECK(ver["parameters"] == json::array({"t1", "t2", "t3", "t4", "t5"}));
    CHECK(ver["relations"] == json::array({"t1*t2 - t3*t4", "t1*t5 + t2*t4"}));
    REQUIRE(ver["brackets"].is_array());
    CHECK(ver["brackets"].size() == 9);
    bool saw = false;
    for (const json& b : ver["brackets"])
        if (b["i"] == 1 && b["j"] == 2) {
            CHECK(b["value"] == "(t2 + t1*t4) e2 + t3 e3");
            saw = true;
        }
    CHECK(saw);
    REQUIRE(ver["corrections"].size() == 1);
    CHECK(ver["corrections"][0]["pair"] == json::array({1, 4}));
    CHECK(ver["truncated_at_second_order"] == true);

    json cls = json::parse(run_cli({"classify", "--algebra", "lambda4", "--param", "1", "--json"}).out);
    CHECK(cls["class"] == "lambda4 family, j = 3");
    CHECK(cls["j"] == "3");
    CHECK(cls["nilpotent"] == true);
}

TEST_CASE("usage errors exit 2 with a message on stderr") {
    struct Row {
        std::vector<std::string> args;
        std::string fragment;
    };
    const Row rows[] = {
        {{"check", "--algebra", "nosuch"}, "error: unknown builtin algebra 'nosuch'"},
        {{"check", "--algebra", "n3", "--algebra-file", "x.json"},
         "error: exactly one of --algebra and --algebra-file is required"},
        {{"check"}, "error: exactly one of --algebra and --algebra-file is required"},
        {{"cohomology", "--algebra", "n3", "--theory", "lie", "--degree", "7"},
         "not in range"},
        {{"cohomology", "--algebra", "n3", "--theory", "heis", "--degree", "2"}, "--theory"},
        {{"check", "--algebra-file", kDataDir + "/n3.json", "--param", "2"},
         "error: --param applies only to --algebra built-ins"},
        {{"check", "--algebra-file", "/nonexistent/nope.json"}, "error:"},
        {{"frobnicate"}, "error:"},
        {{}, "error:"},
    };
    for (const Row& row : rows) {
        CliResult r = run_cli(row.args);
        CHECK(r.exit_code == 2);
        CHECK(r.out.empty());
        CHECK(contains(r.err, row.fragment));
    }
}

TEST_CASE("precondition violations exit 3") {
    CliResult lie_coh = run_cli(
        {"cohomology", "--algebra", "lambda2", "--theory", "lie", "--degree", "2"});
    CHECK(lie_coh.exit_code == 3);
    CHECK(contains(lie_coh.err, "error: lie cohomology requested for a non-Lie algebra"));

    json dim2 = {{"dim", 2}, {"brackets", json::array()}};
    CliResult cls = run_cli({"classify", "--algebra-file", write_temp_algebra(dim2)});
    CHECK(cls.exit_code == 3);
    CHECK(contains(cls.err, "error:"));
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({"cohomology", "--help"}).exit_code == 0);
    CHECK(contains(run_cli({"--help"}).out, "versal"));
}
