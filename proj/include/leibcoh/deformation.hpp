#pragma once

#include "leibcoh/algebra.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/cohomology.hpp"
#include "leibcoh/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leibcoh {

// Bracket table with entries in the truncated parameter ring:
// polys[(i*n + j)*n + k] is the coefficient of e_k in [e_i, e_j].
struct PolyBracketTable {
    std::size_t n = 0;
    std::size_t m = 0; // parameter count
    std::vector<TruncPoly> polys;

    const TruncPoly& at(std::size_t i, std::size_t j, std::size_t k) const {
        return polys[(i * n + j) * n + k];
    }
    TruncPoly& at(std::size_t i, std::size_t j, std::size_t k) {
        return polys[(i * n + j) * n + k];
    }
};

struct InfinitesimalDeformation {
    AlgebraSpec base;
    std::vector<std::string> parameters; // "t1".."tm", m = dim H^2
    std::vector<Cochain> cocycles;       // deformation directions, one per parameter
    PolyBracketTable brackets;           // base bracket + sum t_i * cocycle_i
};

struct MasseyResult {
    Cochain obstruction;        // symmetrized pair cochain, theory-native
    std::vector<Rat> h3_class;  // coordinates over the degree-3 representatives
    bool is_obstructed = false; // class nonzero
};

struct FormalDeformation {
    InfinitesimalDeformation infinitesimal;
    // Correction cochain per unordered parameter pair, quad-indexed like
    // TruncPoly::quad. Zero cochains for pairs needing no correction.
    std::vector<Cochain> corrections;
    std::vector<QuadraticRelation> relations;
    PolyBracketTable brackets; // infinitesimal plus t_i t_j * correction_(i,j)
    bool pinned_basis = false;
};

// Deformation computations over one (algebra, theory) pair.
//
// The degree-2 representative basis is the engine's canonical one, except
// for the Heisenberg algebra fixture where a hand-pinned cocycle basis is
// installed so that parameter indices match the reference tables. Parameter
// indices in this API are 1-based (the index of t_i).
class DeformationEngine {
public:
    DeformationEngine(AlgebraSpec a, Theory theory);

    CohomologyEngine& engine() { return eng_; }
    bool uses_pinned_basis() const { return pinned_; }
    const std::vector<Cochain>& representatives() const { return reps_; }

    InfinitesimalDeformation universal_infinitesimal();

    // Symmetrized second-order obstruction of the pair (t_i, t_j):
    // [phi_i, phi_j] + [phi_j, phi_i] for i != j, [phi_i, phi_i] on the
    // diagonal, reduced against the degree-3 representatives.
    const MasseyResult& massey_square(std::size_t i, std::size_t j);

    // One quadratic form per degree-3 representative direction; zero forms
    // dropped, the rest normalized.
    std::vector<QuadraticRelation> base_relations();

    // If the pair's obstruction cochain is a coboundary, a psi with
    // d(psi) = -(obstruction); otherwise nothing (the pair contributes to
    // the base relations instead).
    std::optional<Cochain> second_order_correction(std::size_t i, std::size_t j);

    FormalDeformation versal_output();

    // True iff phi - psi is a coboundary. Both must be 2-cocycles.
    bool equivalent_infinitesimals(const Cochain& phi, const Cochain& psi);

private:
    void install_basis();
    std::size_t param_count() { return reps_.size(); }
    void check_pair(std::size_t i, std::size_t j);
    Cochain native_obstruction(std::size_t i0, std::size_t j0); // 0-based, i0 <= j0
    Cochain solve_exact(const std::vector<Rat>& rhs); // chi with differential(2)*chi = rhs

    CohomologyEngine eng_;
    bool pinned_ = false;
    std::vector<Cochain> reps_;
    std::map<std::pair<std::size_t, std::size_t>, MasseyResult> massey_;
};

} // namespace leibcoh
