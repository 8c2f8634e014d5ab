#include "leibcoh/cli.hpp"

#include "leibcoh/algebra.hpp"
#include "leibcoh/classify.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/cohomology.hpp"
#include "leibcoh/deformation.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/io.hpp"
#include "leibcoh/poly.hpp"
#include "leibcoh/rational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

namespace leibcoh {

namespace {

using nlohmann::json;

constexpr const char* kConvention =
    "[ei,ej] = sum_k c(i,j,k) ek, 1-based indices; lie cochains live on increasing tuples";

struct SourceFlags {
    std::string algebra_name;
    std::string algebra_file;
    std::vector<std::string> params;
    bool json_out = false;
};

void add_source_flags(CLI::App* sub, SourceFlags& f) {
    sub->add_option("--algebra", f.algebra_name, "built-in algebra name");
    sub->add_option("--algebra-file", f.algebra_file, "path to an algebra file");
    sub->add_option("--param", f.params, "rational parameter(s) for the built-in");
    sub->add_flag("--json", f.json_out, "emit a machine-readable report");
}

AlgebraSpec resolve_algebra(const SourceFlags& f) {
    const bool has_name = !f.algebra_name.empty();
    const bool has_file = !f.algebra_file.empty();
    if (has_name == has_file)
        throw ParseError("exactly one of --algebra and --algebra-file is required");
    if (has_file && !f.params.empty())
        throw ParseError("--param applies only to --algebra built-ins");
    if (has_file) return load_algebra_file(f.algebra_file);
    std::vector<Rat> params;
    for (const auto& p : f.params) params.push_back(parse_rational(p));
    return builtin(f.algebra_name, params);
}

Theory parse_theory(const std::string& s) {
    return s == "lie" ? Theory::lie : Theory::leibniz;
}

std::string tuple_str(const std::vector<std::size_t>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += "e" + std::to_string(tuple[i] + 1);
    }
    return out + ")";
}

// "phi(e2,e3) = e3, phi(e3,e2) = -e3" over the stored tuples; "phi = 0"
// for the zero cochain.
std::string cochain_values(const Cochain& c, const std::string& name) {
    const auto tuples = c.theory == Theory::lie ? increasing_tuples(c.dim, c.degree)
                                                : all_tuples(c.dim, c.degree);
    std::string out;
    for (const auto& tuple : tuples) {
        auto v = c.value_at(tuple);
        if (is_zero_vector(v)) continue;
        if (!out.empty()) out += ", ";
        out += name + tuple_str(tuple) + " = " + render_rat_vector(v);
    }
    if (out.empty()) return name + " = 0";
    return out;
}

std::string pair_str(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

struct Body {
    std::vector<std::string> lines;
    json j = json::object();
};

std::string triple_str(const DefectEntry& d) {
    return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + "," + std::to_string(d.k) + ")";
}

Body cmd_check(const AlgebraSpec& a) {
    IdentityReport rep = check_identities(a);

    std::string lie_part;
    if (rep.lie_ok()) {
        lie_part = "Lie: yes";
    } else if (!rep.is_antisymmetric) {
        auto [i, j] = *rep.first_antisymmetry_failure;
        lie_part = "Lie: no (antisymmetry fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + "))";
    } else {
        lie_part = "Lie: no (Jacobi fails at " + triple_str(rep.jacobi_defects.front()) + ")";
    }
    std::string leib_part =
        rep.leibniz_ok()
            ? "Leibniz: yes"
            : "Leibniz: no (identity fails at " + triple_str(rep.leibniz_defects.front()) + ")";

    Body body;
    body.lines.push_back(lie_part + ", " + leib_part);
    body.j["lie_ok"] = rep.lie_ok();
    body.j["leibniz_ok"] = rep.leibniz_ok();
    body.j["antisymmetry_ok"] = rep.is_antisymmetric;
    if (rep.first_antisymmetry_failure) {
        body.j["first_antisymmetry_failure"] = {rep.first_antisymmetry_failure->first,
                                                rep.first_antisymmetry_failure->second};
    } else {
        body.j["first_antisymmetry_failure"] = nullptr;
    }
    body.j["first_jacobi_failure"] =
        rep.jacobi_defects.empty()
            ? json(nullptr)
            : json({rep.jacobi_defects[0].i, rep.jacobi_defects[0].j, rep.jacobi_defects[0].k});
    body.j["first_leibniz_failure"] =
        rep.leibniz_defects.empty()
            ? json(nullptr)
            : json({rep.leibniz_defects[0].i, rep.leibniz_defects[0].j, rep.leibniz_defects[0].k});
    return body;
}

Body cmd_cohomology(const AlgebraSpec& a, Theory theory, std::size_t degree, bool reps) {
    CohomologyEngine engine(a, theory);
    const CohomologyReport& rep = engine.cohomology(degree);

    Body body;
    body.lines.push_back(std::string("theory: ") + theory_name(theory) +
                         ", degree: " + std::to_string(degree));
    body.lines.push_back("Z=" + std::to_string(rep.dim_Z) + " B=" + std::to_string(rep.dim_B) +
                         " H=" + std::to_string(rep.dim_H));
    body.j["theory"] = theory_name(theory);
    body.j["degree"] = degree;
    body.j["dim_Z"] = rep.dim_Z;
    body.j["dim_B"] = rep.dim_B;
    body.j["dim_H"] = rep.dim_H;
    if (reps) {
        body.lines.push_back("representatives:");
        json jreps = json::array();
        if (rep.representatives.empty()) body.lines.push_back("  (none)");
        for (std::size_t k = 0; k < rep.representatives.size(); ++k) {
            std::string line =
                cochain_values(rep.representatives[k], "phi_" + std::to_string(k + 1));
            body.lines.push_back("  " + line);
            jreps.push_back(line);
        }
        body.j["representatives"] = jreps;
    }
    return body;
}

std::string basis_note(bool pinned) {
    return pinned ? "pinned fixture" : "engine canonical";
}

Body cmd_versal(const AlgebraSpec& a, Theory theory) {
    DeformationEngine de(a, theory);
    FormalDeformation fd = de.versal_output();
    const std::size_t n = a.dim;
    const std::size_t m = fd.infinitesimal.parameters.size();

    Body body;
    body.lines.push_back("cocycle basis: " + basis_note(fd.pinned_basis));
    {
        std::string params = "parameters:";
        if (m == 0) params += " (none)";
        for (const auto& p : fd.infinitesimal.parameters) params += " " + p;
        body.lines.push_back(params);
    }

    body.lines.push_back("brackets:");
    json jbrackets = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<TruncPoly> coeffs;
            coeffs.reserve(n);
            for (std::size_t k = 0; k < n; ++k) coeffs.push_back(fd.brackets.at(i, j, k));
            std::string value = render_poly_vector(coeffs);
            body.lines.push_back("  [e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                 "] = " + value);
            jbrackets.push_back({{"i", i + 1}, {"j", j + 1}, {"value", value}});
        }

    body.lines.push_back("relations:");
    json jrelations = json::array();
    if (fd.relations.empty()) body.lines.push_back("  (none)");
    for (const auto& r : fd.relations) {
        std::string line = render_relation(r);
        body.lines.push_back("  " + line);
        jrelations.push_back(line);
    }

    body.lines.push_back("corrections:");
    json jcorrections = json::array();
    bool any_correction = false;
    std::size_t idx = 0;
    for (std::size_t i0 = 0; i0 < m; ++i0)
        for (std::size_t j0 = i0; j0 < m; ++j0, ++idx) {
            const Cochain& chi = fd.corrections[idx];
            if (chi.is_zero()) continue;
            any_correction = true;
            std::string values = cochain_values(chi, "chi");
            body.lines.push_back("  " + pair_str(i0 + 1, j0 + 1) + ": " + values);
            jcorrections.push_back({{"pair", {i0 + 1, j0 + 1}}, {"value", values}});
        }
    if (!any_correction) body.lines.push_back("  (none)");

    const bool truncated = !fd.relations.empty();
    if (truncated)
        body.lines.push_back("note: truncated at second order; higher-order obstructions not computed");

    body.j["cocycle_basis"] = basis_note(fd.pinned_basis);
    body.j["parameters"] = fd.infinitesimal.parameters;
    body.j["brackets"] = jbrackets;
    body.j["relations"] = jrelations;
    body.j["corrections"] = jcorrections;
    body.j["truncated_at_second_order"] = truncated;
    return body;
}

Body cmd_massey(const AlgebraSpec& a, Theory theory, bool pairs_flag) {
    DeformationEngine de(a, theory);
    const std::size_t m = de.representatives().size();

    Body body;
    body.lines.push_back("cocycle basis: " + basis_note(de.uses_pinned_basis()));
    body.lines.push_back("parameters: " + std::to_string(m));

    std::vector<std::string> obstructed, corrected;
    json jpairs = json::array();
    std::vector<std::string> pair_lines;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i; j <= m; ++j) {
            const MasseyResult& res = de.massey_square(i, j);
            std::string status = res.is_obstructed
                                     ? "obstructed"
                                     : (res.obstruction.is_zero() ? "zero" : "coboundary");
            if (res.is_obstructed) obstructed.push_back(pair_str(i, j));
            if (!res.is_obstructed && !res.obstruction.is_zero())
                corrected.push_back(pair_str(i, j));
            pair_lines.push_back("  " + pair_str(i, j) + ": " + status);
            jpairs.push_back({{"i", i}, {"j", j}, {"status", status}});
        }

    if (pairs_flag) {
        body.lines.push_back("pairs:");
        for (auto& line : pair_lines) body.lines.push_back(line);
    }

    auto join_or_none = [](const std::vector<std::string>& items) {
        if (items.empty()) return std::string(" (none)");
        std::string out;
        for (const auto& s : items) out += " " + s;
        return out;
    };
    body.lines.push_back("obstructed pairs:" + join_or_none(obstructed));
    body.lines.push_back("corrected pairs:" + join_or_none(corrected));

    body.lines.push_back("relations:");
    json jrelations = json::array();
    auto relations = de.base_relations();
    if (relations.empty()) body.lines.push_back("  (none)");
    for (const auto& r : relations) {
        std::string line = render_relation(r);
        body.lines.push_back("  " + line);
        jrelations.push_back(line);
    }

    body.j["cocycle_basis"] = basis_note(de.uses_pinned_basis());
    body.j["parameters"] = m;
    body.j["pairs"] = jpairs;
    body.j["obstructed"] = obstructed;
    body.j["corrected"] = corrected;
    body.j["relations"] = jrelations;
    return body;
}

std::string lcs_str(const std::vector<std::size_t>& dims) {
    std::string out = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(dims[i]);
    }
    return out + "]";
}

Body cmd_classify(const AlgebraSpec& a) {
    IdentityReport idr = check_identities(a);
    Body body;
    if (idr.lie_ok()) {
        LieClass cls = classify_lie3(a);
        body.lines.push_back("class: " + cls.label);
        body.lines.push_back("derived dim: " + std::to_string(cls.derived_dim) +
                             ", center dim: " + std::to_string(cls.center_dim));
        body.j["path"] = "lie";
        body.j["class"] = cls.label;
        body.j["derived_dim"] = cls.derived_dim;
        body.j["center_dim"] = cls.center_dim;
        body.j["invariant"] = cls.invariant ? json(rat_str(*cls.invariant)) : json(nullptr);
        return body;
    }
    if (!idr.leibniz_ok())
        throw PreconditionError("classification requires a Lie or Leibniz algebra");
    if (a.dim != 3) throw PreconditionError("classification requires dimension 3");

    LeibnizFingerprint fp = fingerprint_leibniz3(a);
    body.lines.push_back("class: " + fp.matched_label);
    body.lines.push_back("lcs: " + lcs_str(fp.lcs_dims));
    body.lines.push_back(std::string("lie: ") + (fp.is_lie ? "yes" : "no"));
    if (fp.form_analyzed)
        body.lines.push_back("form ranks: sym " + std::to_string(fp.sym_rank) + ", antisym " +
                             std::to_string(fp.antisym_rank));
    body.j["path"] = "leibniz";
    body.j["class"] = fp.matched_label;
    body.j["lcs"] = fp.lcs_dims;
    body.j["is_lie"] = fp.is_lie;
    body.j["nilpotent"] = fp.nilpotent;
    if (fp.form_analyzed) {
        body.j["sym_rank"] = fp.sym_rank;
        body.j["antisym_rank"] = fp.antisym_rank;
        body.j["j"] = fp.j_invariant ? json(rat_str(*fp.j_invariant)) : json(nullptr);
    }
    return body;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;

    std::string echo;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) echo += " ";
        echo += args[i];
    }

    CLI::App app{"exact cohomology, deformations and classification of "
                 "low-dimensional Leibniz and Lie algebras"};
    app.require_subcommand(1);

    SourceFlags f_check, f_coh, f_versal, f_classify, f_massey;
    std::string theory_coh, theory_versal, theory_massey;
    int degree = 0;
    bool reps = false, pairs_flag = false;

    CLI::App* sub_check = app.add_subcommand("check", "verify the Jacobi and Leibniz identities");
    add_source_flags(sub_check, f_check);

    CLI::App* sub_coh = app.add_subcommand("cohomology", "cocycles, coboundaries, cohomology");
    add_source_flags(sub_coh, f_coh);
    sub_coh->add_option("--theory", theory_coh, "lie or leibniz")
        ->required()
        ->check(CLI::IsMember({"lie", "leibniz"}));
    sub_coh->add_option("--degree", degree, "cochain degree")
        ->required()
        ->check(CLI::Range(1, 3));
    sub_coh->add_flag("--reps", reps, "print representative cocycles");

    CLI::App* sub_versal = app.add_subcommand("versal", "versal deformation with base relations");
    add_source_flags(sub_versal, f_versal);
    sub_versal->add_option("--theory", theory_versal, "lie or leibniz")
        ->required()
        ->check(CLI::IsMember({"lie", "leibniz"}));

    CLI::App* sub_classify = app.add_subcommand("classify", "match against the catalogues");
    add_source_flags(sub_classify, f_classify);

    CLI::App* sub_massey = app.add_subcommand("massey", "pairwise second-order obstructions");
    add_source_flags(sub_massey, f_massey);
    sub_massey->add_option("--theory", theory_massey, "lie or leibniz")
        ->required()
        ->check(CLI::IsMember({"lie", "leibniz"}));
    sub_massey->add_flag("--pairs", pairs_flag, "per-pair verdict list");

    std::vector<const char*> argv;
    argv.push_back("leibcoh");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            result.out = app.help();
            return result;
        } catch (const CLI::CallForAllHelp&) {
            result.out = app.help("", CLI::AppFormatMode::All);
            return result;
        } catch (const CLI::ParseError& e) {
            result.err = std::string("error: ") + e.what() + "\n";
            result.exit_code = 2;
            return result;
        }

        const SourceFlags* flags = nullptr;
        Body body;
        if (app.got_subcommand(sub_check)) {
            flags = &f_check;
            body = cmd_check(resolve_algebra(f_check));
        } else if (app.got_subcommand(sub_coh)) {
            flags = &f_coh;
            body = cmd_cohomology(resolve_algebra(f_coh), parse_theory(theory_coh),
                                  static_cast<std::size_t>(degree), reps);
        } else if (app.got_subcommand(sub_versal)) {
            flags = &f_versal;
            body = cmd_versal(resolve_algebra(f_versal), parse_theory(theory_versal));
        } else if (app.got_subcommand(sub_classify)) {
            flags = &f_classify;
            body = cmd_classify(resolve_algebra(f_classify));
        } else if (app.got_subcommand(sub_massey)) {
            flags = &f_massey;
            body = cmd_massey(resolve_algebra(f_massey), parse_theory(theory_massey), pairs_flag);
        } else {
            throw ParseError("a subcommand is required");
        }

        // The fingerprint covers the mathematical content only, so a
        // builtin and its shipped data file report identically.
        const std::string fp = fingerprint_hex(resolve_algebra(*flags));

        if (flags->json_out) {
            json out = body.j;
            out["command"] = echo;
            out["fingerprint"] = fp;
            out["convention"] = kConvention;
            result.out = out.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "command: " << echo << "\n";
            os << "fingerprint: " << fp << "\n";
            os << "convention: " << kConvention << "\n";
            for (const auto& line : body.lines) os << line << "\n";
            result.out = os.str();
        }
        return result;
    } catch (const ParseError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const PreconditionError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 3;
    } catch (const std::exception& e) {
        result.err = std::string("internal error: ") + e.what() + "\n";
        result.exit_code = 1;
    }
    return result;
}

} // namespace leibcoh
