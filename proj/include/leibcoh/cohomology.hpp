#pragma once

#include "leibcoh/algebra.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/matrix.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace leibcoh {

struct CohomologyReport {
    Theory theory;
    std::size_t degree = 0;
    std::size_t dim_Z = 0, dim_B = 0, dim_H = 0;
    SubspaceBasis cocycles;      // Z^q, canonical
    SubspaceBasis coboundaries;  // B^q, canonical
    std::vector<Cochain> representatives; // one per H class, canonical complement
};

struct ClassReduction {
    Cochain canonical;             // sum of coordinates * representatives
    std::vector<Rat> coordinates;  // coefficients on the representatives
    bool is_coboundary = false;    // class is zero
};

// Caches differentials, cohomology reports and class-reduction transforms
// per degree for one (algebra, theory) pair. Construction validates the
// theory's identity (PreconditionError otherwise).
class CohomologyEngine {
public:
    CohomologyEngine(AlgebraSpec a, Theory theory);

    const AlgebraSpec& algebra() const { return a_; }
    Theory theory() const { return theory_; }

    const MatrixQ& differential(std::size_t q);
    const CohomologyReport& cohomology(std::size_t q);

    // Express a q-cocycle as (combination of representatives) + coboundary.
    // PreconditionError if c is not a cocycle.
    ClassReduction class_reduce(std::size_t q, const Cochain& c);

private:
    struct Reducer {
        MatrixQ transform; // T with T * [reps | coboundary basis] = rref
        std::size_t n_reps = 0, n_cob = 0;
    };
    const Reducer& reducer(std::size_t q);

    AlgebraSpec a_;
    Theory theory_;
    std::map<std::size_t, MatrixQ> differentials_;
    std::map<std::size_t, CohomologyReport> reports_;
    std::map<std::size_t, Reducer> reducers_;
};

// The reference cohomology table of 3-dimensional Lie algebras:
// (H^1, H^2, H^3) dimensions per catalogue entry.
struct LieTableRow {
    std::string label;
    std::array<std::size_t, 3> h;
};
std::vector<LieTableRow> lie_table();

} // namespace leibcoh
