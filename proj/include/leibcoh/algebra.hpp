#pragma once

#include "leibcoh/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leibcoh {

// A finite-dimensional algebra over Q given by structure constants:
// [e_i, e_j] = sum_k c(i,j,k) e_k, indices 0-based internally. All user
// facing indices (JSON files, reports) are 1-based.
struct AlgebraSpec {
    std::size_t dim = 0;
    std::vector<Rat> c; // flat, ((i * dim) + j) * dim + k
    std::string name;   // display only; no computation depends on it

    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }
    Rat& at(std::size_t i, std::size_t j, std::size_t k) {
        return c[(i * dim + j) * dim + k];
    }

    // [x, y] for coordinate vectors x, y of length dim.
    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    // Degenerate but valid: every bracket zero.
    static AlgebraSpec zero(std::size_t dim, std::string name = "");
};

struct DefectEntry {
    std::size_t i, j, k;      // 1-based triple
    std::vector<Rat> defect;  // nonzero defect vector
};

struct IdentityReport {
    bool is_antisymmetric = true;
    // First (i, j), 1-based, with [e_i,e_j] != -[e_j,e_i]; includes i == j
    // when [e_i,e_i] != 0.
    std::optional<std::pair<std::size_t, std::size_t>> first_antisymmetry_failure;
    std::vector<DefectEntry> jacobi_defects;   // nonzero Jacobi sums
    std::vector<DefectEntry> leibniz_defects;  // nonzero Leibniz defects

    bool lie_ok() const { return is_antisymmetric && jacobi_defects.empty(); }
    bool leibniz_ok() const { return leibniz_defects.empty(); }
};

// Checks both identities in one pass over all basis triples (lex order):
//   Jacobi sum    [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
//   Leibniz defect [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
IdentityReport check_identities(const AlgebraSpec& a);

// Named algebras. "d" takes two parameters (r, s); "lambda4" takes one
// (alpha); all others take none. Unknown names or wrong parameter counts
// throw ParseError. Lie presentations are entered on increasing pairs only
// and antisymmetrized here.
AlgebraSpec builtin(const std::string& name, const std::vector<Rat>& params);
std::vector<std::string> builtin_names();

// Dimensions of the lower central series L >= [L,L] >= [L,[L,L]] >= ...
// (left-normed products, which for these checks agrees with the two-sided
// ideal chain). Stops after the first repeat or at zero; the algebra is
// nilpotent iff the last entry is 0.
std::vector<std::size_t> lower_central_series(const AlgebraSpec& a);

bool is_nilpotent(const AlgebraSpec& a);

// Change of basis: new generators are the columns of p (invertible), and
// the new bracket is the old one conjugated, [x,y]' = p^{-1} [p x, p y].
AlgebraSpec transform_basis(const AlgebraSpec& a, const std::vector<std::vector<Rat>>& p_cols);

} // namespace leibcoh
