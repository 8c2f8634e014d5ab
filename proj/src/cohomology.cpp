#include "leibcoh/cohomology.hpp"

#include "leibcoh/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibcoh {

CohomologyEngine::CohomologyEngine(AlgebraSpec a, Theory theory)
    : a_(std::move(a)), theory_(theory) {
    IdentityReport report = check_identities(a_);
    if (theory_ == Theory::lie && !report.lie_ok())
        throw PreconditionError("lie cohomology requested for a non-Lie algebra");
    if (!report.leibniz_ok())
        throw PreconditionError("algebra does not satisfy the Leibniz identity");
}

const MatrixQ& CohomologyEngine::differential(std::size_t q) {
    auto it = differentials_.find(q);
    if (it == differentials_.end()) {
        MatrixQ d = theory_ == Theory::lie ? lie_differential(a_, q) : leibniz_differential(a_, q);
        it = differentials_.emplace(q, std::move(d)).first;
    }
    return it->second;
}

const CohomologyReport& CohomologyEngine::cohomology(std::size_t q) {
    auto it = reports_.find(q);
    if (it != reports_.end()) return it->second;

    CohomologyReport rep;
    rep.theory = theory_;
    rep.degree = q;
    rep.cocycles = kernel_basis(differential(q));
    if (q == 0) {
        rep.coboundaries.ambient_dim = cochain_dim(theory_, 0, a_.dim);
    } else {
        rep.coboundaries = image_basis(differential(q - 1));
    }
    rep.dim_Z = rep.cocycles.dim();
    rep.dim_B = rep.coboundaries.dim();
    rep.dim_H = rep.dim_Z - rep.dim_B;

    // Representatives: cocycle basis vectors whose pivot is not a pivot of
    // the coboundary space. Greedy and deterministic; they span a
    // complement of B inside Z because both bases are in rref.
    for (std::size_t k = 0; k < rep.cocycles.dim(); ++k) {
        std::size_t pivot = rep.cocycles.pivots[k];
        bool taken = std::find(rep.coboundaries.pivots.begin(), rep.coboundaries.pivots.end(),
                               pivot) != rep.coboundaries.pivots.end();
        if (taken) continue;
        Cochain c;
        c.theory = theory_;
        c.degree = q;
        c.dim = a_.dim;
        c.v = rep.cocycles.vectors[k];
        rep.representatives.push_back(std::move(c));
    }
    if (rep.representatives.size() != rep.dim_H)
        throw std::logic_error("representative count mismatch");

    return reports_.emplace(q, std::move(rep)).first->second;
}

const CohomologyEngine::Reducer& CohomologyEngine::reducer(std::size_t q) {
    auto it = reducers_.find(q);
    if (it != reducers_.end()) return it->second;

    const CohomologyReport& rep = cohomology(q);
    const std::size_t N = cochain_dim(theory_, q, a_.dim);
    const std::size_t h = rep.representatives.size();
    const std::size_t b = rep.coboundaries.dim();

    // Row-reduce [reps | coboundaries | I]; the right block then maps any
    // cocycle to its coefficients over the combined basis of Z^q.
    MatrixQ aug(N, h + b + N);
    for (std::size_t c = 0; c < h; ++c)
        for (std::size_t r = 0; r < N; ++r) aug.at(r, c) = rep.representatives[c].v[r];
    for (std::size_t c = 0; c < b; ++c)
        for (std::size_t r = 0; r < N; ++r) aug.at(r, h + c) = rep.coboundaries.vectors[c][r];
    for (std::size_t r = 0; r < N; ++r) aug.at(r, h + b + r) = Rat(1);

    RrefResult rr = rref(std::move(aug));
    // reps + coboundaries are independent, so the first h+b pivots are the
    // first h+b columns.
    for (std::size_t k = 0; k < h + b; ++k)
        if (k >= rr.pivots.size() || rr.pivots[k] != k)
            throw std::logic_error("class basis is not independent");

    Reducer red;
    red.n_reps = h;
    red.n_cob = b;
    red.transform = MatrixQ(N, N);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) red.transform.at(r, c) = rr.m.at(r, h + b + c);
    return reducers_.emplace(q, std::move(red)).first->second;
}

ClassReduction CohomologyEngine::class_reduce(std::size_t q, const Cochain& c) {
    if (c.theory != theory_ || c.degree != q || c.dim != a_.dim)
        throw std::invalid_argument("class_reduce: cochain shape mismatch");
    const Reducer& red = reducer(q);
    const CohomologyReport& rep = cohomology(q);

    std::vector<Rat> w = red.transform.apply(c.v);
    for (std::size_t r = red.n_reps + red.n_cob; r < w.size(); ++r)
        if (!w[r].is_zero())
            throw PreconditionError("class_reduce: cochain is not a cocycle");

    ClassReduction out;
    out.coordinates.assign(w.begin(), w.begin() + red.n_reps);
    out.canonical = Cochain::zero(theory_, q, a_.dim);
    for (std::size_t k = 0; k < red.n_reps; ++k) {
        if (out.coordinates[k].is_zero()) continue;
        for (std::size_t r = 0; r < out.canonical.v.size(); ++r)
            out.canonical.v[r] += out.coordinates[k] * rep.representatives[k].v[r];
    }
    out.is_coboundary = is_zero_vector(out.coordinates);
    return out;
}

std::vector<LieTableRow> lie_table() {
    struct Entry {
        const char* label;
        const char* name;
        std::vector<Rat> params;
    };
    const std::vector<Entry> entries = {
        {"n3", "n3", {}},
        {"r31", "r31", {}},
        {"d(1:1)", "d", {Rat(1), Rat(1)}},
        {"d(2:3)", "d", {Rat(2), Rat(3)}},
        {"d(1:0)", "d", {Rat(1), Rat(0)}},
        {"d(1:-1)", "d", {Rat(1), Rat(-1)}},
        {"sl2", "sl2", {}},
    };
    std::vector<LieTableRow> table;
    for (const Entry& e : entries) {
        CohomologyEngine engine(builtin(e.name, e.params), Theory::lie);
        LieTableRow row;
        row.label = e.label;
        for (std::size_t q = 1; q <= 3; ++q) row.h[q - 1] = engine.cohomology(q).dim_H;
        table.push_back(std::move(row));
    }
    return table;
}

} // namespace leibcoh
