// Python surface: thin wrappers that run the exact engines and hand back
// plain dicts/lists/strings. Rationals cross the boundary as strings to
// keep exactness; callers can feed them to fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leibcoh/algebra.hpp"
#include "leibcoh/classify.hpp"
#include "leibcoh/cli.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/cohomology.hpp"
#include "leibcoh/deformation.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/io.hpp"
#include "leibcoh/poly.hpp"
#include "leibcoh/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace leibcoh;

namespace {

Theory parse_theory(const std::string& s) {
    if (s == "lie") return Theory::lie;
    if (s == "leibniz") return Theory::leibniz;
    throw ParseError("unknown theory '" + s + "' (expected lie or leibniz)");
}

std::vector<Rat> parse_params(const std::vector<std::string>& params) {
    std::vector<Rat> out;
    out.reserve(params.size());
    for (const auto& p : params) out.push_back(parse_rational(p));
    return out;
}

std::string tuple_str(const std::vector<std::size_t>& tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ",";
        s += "e" + std::to_string(tuple[i] + 1);
    }
    return s + ")";
}

// "phi(e1,e2) = e2, phi(e2,e1) = -e2" over the stored tuple grid
std::string render_cochain(const Cochain& c, const std::string& name) {
    const auto tuples = c.theory == Theory::lie ? increasing_tuples(c.dim, c.degree)
                                                : all_tuples(c.dim, c.degree);
    std::string s;
    for (const auto& t : tuples) {
        const std::vector<Rat> v = c.value_at(t);
        if (is_zero_vector(v)) continue;
        if (!s.empty()) s += ", ";
        s += name + tuple_str(t) + " = " + render_rat_vector(v);
    }
    return s.empty() ? name + " = 0" : s;
}

py::dict check_report(const AlgebraSpec& a) {
    const IdentityReport rep = check_identities(a);
    py::dict d;
    d["lie_ok"] = rep.lie_ok();
    d["leibniz_ok"] = rep.leibniz_ok();
    d["antisymmetry_ok"] = rep.is_antisymmetric;
    if (rep.first_antisymmetry_failure)
        d["first_antisymmetry_failure"] = py::make_tuple(rep.first_antisymmetry_failure->first,
                                                         rep.first_antisymmetry_failure->second);
    else
        d["first_antisymmetry_failure"] = py::none();
    return d;
}

py::dict cohomology_report(const AlgebraSpec& a, const std::string& theory, std::size_t degree,
                           bool representatives) {
    if (degree < 1 || degree > 3) throw ParseError("degree must be 1, 2 or 3");
    CohomologyEngine eng(a, parse_theory(theory));
    const CohomologyReport& rep = eng.cohomology(degree);
    py::dict d;
    d["theory"] = theory;
    d["degree"] = degree;
    d["Z"] = rep.dim_Z;
    d["B"] = rep.dim_B;
    d["H"] = rep.dim_H;
    if (representatives) {
        py::list reps;
        for (std::size_t i = 0; i < rep.representatives.size(); ++i)
            reps.append(render_cochain(rep.representatives[i], "phi_" + std::to_string(i + 1)));
        d["representatives"] = reps;
    }
    return d;
}

py::dict versal_report(const AlgebraSpec& a, const std::string& theory) {
    DeformationEngine de(a, parse_theory(theory));
    const FormalDeformation fd = de.versal_output();
    const std::size_t n = fd.brackets.n;
    const std::size_t m = fd.infinitesimal.parameters.size();

    py::dict d;
    d["parameters"] = fd.infinitesimal.parameters;
    d["pinned_basis"] = fd.pinned_basis;

    py::list rows;
    for (std::size_t i = 0; i < n; ++i) {
        py::list row;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<TruncPoly> coeffs;
            for (std::size_t k = 0; k < n; ++k) coeffs.push_back(fd.brackets.at(i, j, k));
            row.append(render_poly_vector(coeffs));
        }
        rows.append(row);
    }
    d["brackets"] = rows;

    py::list rels;
    for (const QuadraticRelation& r : fd.relations) rels.append(render_relation(r));
    d["relations"] = rels;

    py::dict corr;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const Cochain& chi = fd.corrections[TruncPoly::quad_index(m, i, j)];
            if (chi.is_zero()) continue;
            corr[py::make_tuple(i + 1, j + 1)] = render_cochain(chi, "chi");
        }
    d["corrections"] = corr;
    d["truncated_at_second_order"] = !fd.relations.empty();
    return d;
}

py::dict massey_report(const AlgebraSpec& a, const std::string& theory) {
    DeformationEngine de(a, parse_theory(theory));
    const std::size_t m = de.representatives().size();
    py::dict pairs, d;
    py::list obstructed, corrected;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i; j <= m; ++j) {
            const MasseyResult& res = de.massey_square(i, j);
            std::string status;
            if (res.is_obstructed) {
                status = "obstructed";
                obstructed.append(py::make_tuple(i, j));
            } else if (res.obstruction.is_zero()) {
                status = "zero";
            } else {
                status = "coboundary";
                if (auto chi = de.second_order_correction(i, j); chi && !chi->is_zero())
                    corrected.append(py::make_tuple(i, j));
            }
            pairs[py::make_tuple(i, j)] = status;
        }
    d["parameters"] = m;
    d["pairs"] = pairs;
    d["obstructed"] = obstructed;
    d["corrected"] = corrected;
    py::list rels;
    for (const QuadraticRelation& r : de.base_relations()) rels.append(render_relation(r));
    d["relations"] = rels;
    return d;
}

py::dict classify_report(const AlgebraSpec& a) {
    const IdentityReport rep = check_identities(a);
    py::dict d;
    if (rep.lie_ok()) {
        const LieClass cls = classify_lie3(a);
        d["kind"] = "lie";
        d["class"] = cls.label;
        d["derived_dim"] = cls.derived_dim;
        d["center_dim"] = cls.center_dim;
        d["invariant"] = cls.invariant ? py::object(py::str(rat_str(*cls.invariant)))
                                       : py::object(py::none());
        return d;
    }
    if (rep.leibniz_ok()) {
        const LeibnizFingerprint fp = fingerprint_leibniz3(a);
        d["kind"] = "leibniz";
        d["class"] = fp.matched_label;
        d["lcs"] = fp.lcs_dims;
        d["lie"] = fp.is_lie;
        d["nilpotent"] = fp.nilpotent;
        if (fp.form_analyzed) {
            d["sym_rank"] = fp.sym_rank;
            d["antisym_rank"] = fp.antisym_rank;
        }
        d["j"] = fp.j_invariant ? py::object(py::str(rat_str(*fp.j_invariant)))
                                : py::object(py::none());
        return d;
    }
    throw PreconditionError("classification requires a Lie or Leibniz algebra");
}

} // namespace

PYBIND11_MODULE(_leibcoh, m) {
    m.doc() = "Exact Lie and Leibniz cohomology and deformations of "
              "finite-dimensional algebras given by structure constants.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<AlgebraSpec>(m, "Algebra")
        .def_readonly("dim", &AlgebraSpec::dim)
        .def_readonly("name", &AlgebraSpec::name)
        .def("__repr__", [](const AlgebraSpec& a) {
            std::string label = a.name.empty() ? "?" : a.name;
            return "<Algebra '" + label + "' dim=" + std::to_string(a.dim) + ">";
        });

    m.def(
        "builtin",
        [](const std::string& name, const std::vector<std::string>& params) {
            return builtin(name, parse_params(params));
        },
        py::arg("name"), py::arg("params") = std::vector<std::string>{},
        "Construct a named catalogue algebra; rational parameters as strings.");
    m.def("builtin_names", &builtin_names);
    m.def(
        "from_json", [](const std::string& text) { return algebra_from_json(nlohmann::json::parse(text)); },
        py::arg("text"), "Parse an algebra from its JSON description.");
    m.def(
        "to_json", [](const AlgebraSpec& a) { return algebra_to_json(a).dump(2); }, py::arg("algebra"),
        "Canonical JSON description of an algebra.");
    m.def("fingerprint", &fingerprint_hex, py::arg("algebra"),
          "16-hex-digit digest of the structure constants (name-independent).");

    m.def("check", &check_report, py::arg("algebra"),
          "Verify the Jacobi/antisymmetry and Leibniz identities.");
    m.def("cohomology", &cohomology_report, py::arg("algebra"), py::arg("theory"),
          py::arg("degree"), py::arg("representatives") = false,
          "Cocycle/coboundary/cohomology dimensions, optionally with rendered "
          "representatives.");
    m.def("versal", &versal_report, py::arg("algebra"), py::arg("theory"),
          "Versal deformation truncated at second order: parameter list, bracket "
          "table, base relations and corrections.");
    m.def("massey", &massey_report, py::arg("algebra"), py::arg("theory"),
          "Second-order obstruction analysis of the universal infinitesimal "
          "deformation.");
    m.def("classify", &classify_report, py::arg("algebra"),
          "Classify a 3-dimensional Lie algebra, or fingerprint a 3-dimensional "
          "nilpotent Leibniz algebra.");

    m.def("lie_table", [] {
        py::list rows;
        for (const LieTableRow& row : lie_table())
            rows.append(py::make_tuple(row.label, py::make_tuple(row.h[0], row.h[1], row.h[2])));
        return rows;
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            const CliResult r = run_cli(args);
            return py::make_tuple(r.exit_code, r.out, r.err);
        },
        py::arg("args"), "Run one CLI command in-process; returns (exit_code, stdout, stderr).");
}
