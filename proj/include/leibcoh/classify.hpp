#pragma once

#include "leibcoh/algebra.hpp"
#include "leibcoh/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibcoh {

enum class LieKind {
    abelian,
    n3,        // Heisenberg
    r2_plus_C, // nonabelian 2-dim part plus a central line
    d_family,  // d(r:s), generic two-dimensional derived algebra
    r3,        // = d(1:1), the non-diagonalizable invariant-4 case
    r3_1,      // diagonalizable invariant-4 case (scalar adjoint action)
    r3_m1,     // = d(1:-1), invariant 0
    sl2,
};

struct LieClass {
    LieKind kind = LieKind::abelian;
    std::optional<Rat> invariant; // (tr ad_x)^2 / det(ad_x) on the derived algebra
    std::size_t derived_dim = 0;
    std::size_t center_dim = 0;
    std::string label; // printed form, e.g. "n3 (Heisenberg)", "d-family, invariant = 25/6"
};

// Decision tree over isomorphism invariants only; requires a Lie algebra of
// dimension 3 (PreconditionError otherwise).
LieClass classify_lie3(const AlgebraSpec& a);

struct LeibnizFingerprint {
    std::vector<std::size_t> lcs_dims;
    bool is_lie = false;
    bool nilpotent = false;
    // The fields below are filled when dim L^2 = 1: the bracket composed
    // with a projection to L^2 is a bilinear form B; its radical (vectors
    // killed on both sides) is quotiented away, and the symmetric and
    // antisymmetric parts of the induced form are rank-analyzed.
    std::size_t bilinear_rank = 0;
    std::size_t sym_rank = 0;
    std::size_t antisym_rank = 0;
    // det(sym part) / Pf(antisym part)^2 on a 2-dim quotient; invariant
    // under basis change and rescaling of L^2. Equals 4a - 1 on the
    // catalogue family with [e3,e3] = a e1.
    std::optional<Rat> j_invariant;
    bool form_analyzed = false; // the rank fields above were computed
    std::string matched_label;
};

// Fingerprint a 3-dimensional Leibniz algebra against the nilpotent
// catalogue lambda1..lambda6. Non-nilpotent input is a finding, not an
// error: the series is reported and matching stops.
LeibnizFingerprint fingerprint_leibniz3(const AlgebraSpec& a);

} // namespace leibcoh
