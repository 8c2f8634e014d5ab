#include "leibcoh/deformation.hpp"

#include "leibcoh/errors.hpp"
#include "leibcoh/io.hpp"
#include "leibcoh/matrix.hpp"

#include <stdexcept>

namespace leibcoh {

namespace {

Cochain lie2(std::size_t dim, std::initializer_list<std::pair<std::pair<std::size_t, std::size_t>,
                                                              std::size_t>> values) {
    Cochain c = Cochain::zero(Theory::lie, 2, dim);
    for (const auto& [args, out] : values) {
        std::vector<Rat> v(dim, Rat(0));
        v[out] = Rat(1);
        c.set_value({args.first, args.second}, v);
    }
    return c;
}

Cochain leib2_neg(std::size_t dim, std::size_t i, std::size_t j, std::size_t out, bool negate) {
    Cochain c = Cochain::zero(Theory::leibniz, 2, dim);
    std::vector<Rat> v(dim, Rat(0));
    v[out] = negate ? Rat(-1) : Rat(1);
    c.set_value({i, j}, v);
    return c;
}

// The hand-pinned Heisenberg cocycle basis. Lie: f1..f5; leibniz: their
// extensions followed by the three one-slot cochains.
std::vector<Cochain> heisenberg_fixture(Theory theory) {
    std::vector<Cochain> lie = {
        lie2(3, {{{1, 2}, 2}}),               // f1: (e2,e3) -> e3
        lie2(3, {{{0, 1}, 1}, {{0, 2}, 2}}),  // f2, second value negated below
        lie2(3, {{{0, 1}, 2}}),               // f3: (e1,e2) -> e3
        lie2(3, {{{0, 2}, 0}}),               // f4: (e1,e3) -> e1
        lie2(3, {{{0, 2}, 1}}),               // f5: (e1,e3) -> e2
    };
    {
        std::vector<Rat> v(3, Rat(0));
        v[2] = Rat(-1);
        lie[1].set_value({0, 2}, v); // f2: (e1,e3) -> -e3
    }
    if (theory == Theory::lie) return lie;

    std::vector<Cochain> out;
    for (const Cochain& c : lie) out.push_back(to_leibniz(c));
    out.push_back(leib2_neg(3, 1, 1, 0, false)); // (e2,e2) -> e1
    out.push_back(leib2_neg(3, 2, 1, 0, false)); // (e3,e2) -> e1
    out.push_back(leib2_neg(3, 2, 2, 0, false)); // (e3,e3) -> e1
    return out;
}

} // namespace

DeformationEngine::DeformationEngine(AlgebraSpec a, Theory theory)
    : eng_(std::move(a), theory) {
    install_basis();
}

void DeformationEngine::install_basis() {
    const CohomologyReport& h2 = eng_.cohomology(2);

    const AlgebraSpec heis = builtin("n3", {});
    if (eng_.algebra().dim == 3 &&
        canonical_serialization(eng_.algebra()) == canonical_serialization(heis)) {
        std::vector<Cochain> fixture = heisenberg_fixture(eng_.theory());
        if (fixture.size() != h2.dim_H) throw std::logic_error("fixture size mismatch");

        // Validate the fixture: each entry a cocycle, jointly independent
        // modulo coboundaries.
        std::vector<std::vector<Rat>> vectors;
        for (const Cochain& c : fixture) {
            if (!is_zero_vector(eng_.differential(2).apply(c.v)))
                throw std::logic_error("fixture cochain is not a cocycle");
            vectors.push_back(c.v);
        }
        for (const auto& b : h2.coboundaries.vectors) vectors.push_back(b);
        SubspaceBasis joint = span_of(vectors.front().size(), vectors);
        if (joint.dim() != h2.dim_H + h2.dim_B)
            throw std::logic_error("fixture is dependent modulo coboundaries");

        reps_ = std::move(fixture);
        pinned_ = true;
        return;
    }
    reps_ = h2.representatives;
}

InfinitesimalDeformation DeformationEngine::universal_infinitesimal() {
    const AlgebraSpec& a = eng_.algebra();
    const std::size_t n = a.dim;
    const std::size_t m = param_count();

    InfinitesimalDeformation inf;
    inf.base = a;
    for (std::size_t i = 0; i < m; ++i) inf.parameters.push_back("t" + std::to_string(i + 1));
    inf.cocycles = reps_;
    inf.brackets.n = n;
    inf.brackets.m = m;
    inf.brackets.polys.assign(n * n * n, TruncPoly::zero(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Rat>> values;
            values.reserve(m);
            for (std::size_t p = 0; p < m; ++p) values.push_back(reps_[p].value_at({i, j}));
            for (std::size_t k = 0; k < n; ++k) {
                TruncPoly& poly = inf.brackets.at(i, j, k);
                poly.c0 = a.at(i, j, k);
                for (std::size_t p = 0; p < m; ++p) poly.lin[p] = values[p][k];
            }
        }
    return inf;
}

void DeformationEngine::check_pair(std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > param_count() || j > param_count())
        throw PreconditionError("parameter pair index out of range 1.." +
                                std::to_string(param_count()));
}

Cochain DeformationEngine::native_obstruction(std::size_t i0, std::size_t j0) {
    Cochain omega = i0 == j0 ? graded_bracket(reps_[i0], reps_[i0])
                             : graded_bracket(reps_[i0], reps_[j0]) +
                                   graded_bracket(reps_[j0], reps_[i0]);
    if (eng_.theory() == Theory::leibniz) return omega;
    // Alternating inputs over a Lie algebra keep the bracket alternating.
    std::optional<Cochain> lie = try_restrict_to_lie(omega);
    if (!lie) throw std::logic_error("obstruction of alternating cochains failed to restrict");
    return *lie;
}

const MasseyResult& DeformationEngine::massey_square(std::size_t i, std::size_t j) {
    check_pair(i, j);
    std::size_t i0 = i - 1, j0 = j - 1;
    if (i0 > j0) std::swap(i0, j0);
    auto key = std::make_pair(i0, j0);
    auto it = massey_.find(key);
    if (it != massey_.end()) return it->second;

    MasseyResult result;
    result.obstruction = native_obstruction(i0, j0);
    ClassReduction red = eng_.class_reduce(3, result.obstruction);
    result.h3_class = red.coordinates;
    result.is_obstructed = !red.is_coboundary;
    return massey_.emplace(key, std::move(result)).first->second;
}

std::vector<QuadraticRelation> DeformationEngine::base_relations() {
    const std::size_t m = param_count();
    const std::size_t h3 = eng_.cohomology(3).dim_H;

    std::vector<std::vector<Rat>> raw;
    for (std::size_t k = 0; k < h3; ++k) {
        std::vector<Rat> coeffs(TruncPoly::quad_size(m), Rat(0));
        bool nonzero = false;
        for (std::size_t i0 = 0; i0 < m; ++i0)
            for (std::size_t j0 = i0; j0 < m; ++j0) {
                const Rat& c = massey_square(i0 + 1, j0 + 1).h3_class[k];
                if (c.is_zero()) continue;
                coeffs[TruncPoly::quad_index(m, i0, j0)] = c;
                nonzero = true;
            }
        if (nonzero) raw.push_back(std::move(coeffs));
    }

    // One form per degree-3 direction, but those forms are usually
    // dependent; present an independent generating set instead.
    SubspaceBasis reduced = span_of(TruncPoly::quad_size(m), raw);
    std::vector<QuadraticRelation> relations;
    relations.reserve(reduced.vectors.size());
    for (const auto& v : reduced.vectors)
        relations.push_back(QuadraticRelation::normalized(m, v));
    return relations;
}

Cochain DeformationEngine::solve_exact(const std::vector<Rat>& rhs) {
    std::optional<std::vector<Rat>> x = solve(eng_.differential(2), rhs);
    if (!x) throw std::logic_error("correction system unexpectedly inconsistent");
    Cochain chi;
    chi.theory = eng_.theory();
    chi.degree = 2;
    chi.dim = eng_.algebra().dim;
    chi.v = std::move(*x);
    return chi;
}

std::optional<Cochain> DeformationEngine::second_order_correction(std::size_t i, std::size_t j) {
    const MasseyResult& massey = massey_square(i, j);
    if (massey.is_obstructed) return std::nullopt;
    std::vector<Rat> rhs(massey.obstruction.v.size());
    for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] = -massey.obstruction.v[r];
    return solve_exact(rhs);
}

FormalDeformation DeformationEngine::versal_output() {
    FormalDeformation out;
    out.infinitesimal = universal_infinitesimal();
    out.relations = base_relations();
    out.pinned_basis = pinned_;

    const std::size_t n = eng_.algebra().dim;
    const std::size_t m = param_count();

    // Per pair, cancel the exact part of the obstruction: the deformation
    // defect contributes -1/2 * omega per unordered pair, so chi with
    // d(chi) = 1/2 * (omega - class part) makes the bracket flat modulo
    // the relation ideal.
    out.corrections.reserve(TruncPoly::quad_size(m));
    for (std::size_t i0 = 0; i0 < m; ++i0)
        for (std::size_t j0 = i0; j0 < m; ++j0) {
            const MasseyResult& massey = massey_square(i0 + 1, j0 + 1);
            ClassReduction red = eng_.class_reduce(3, massey.obstruction);
            std::vector<Rat> rhs(massey.obstruction.v.size());
            for (std::size_t r = 0; r < rhs.size(); ++r)
                rhs[r] = (massey.obstruction.v[r] - red.canonical.v[r]) / 2;
            out.corrections.push_back(solve_exact(rhs));
        }

    out.brackets = out.infinitesimal.brackets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Rat>> values;
            values.reserve(out.corrections.size());
            for (const Cochain& chi : out.corrections) values.push_back(chi.value_at({i, j}));
            for (std::size_t k = 0; k < n; ++k) {
                TruncPoly& poly = out.brackets.at(i, j, k);
                for (std::size_t idx = 0; idx < out.corrections.size(); ++idx)
                    poly.quad[idx] += values[idx][k];
            }
        }
    return out;
}

bool DeformationEngine::equivalent_infinitesimals(const Cochain& phi, const Cochain& psi) {
    const std::size_t n = eng_.algebra().dim;
    for (const Cochain* c : {&phi, &psi}) {
        if (c->theory != eng_.theory() || c->degree != 2 || c->dim != n)
            throw PreconditionError("equivalent_infinitesimals: cochain shape mismatch");
        if (!is_zero_vector(eng_.differential(2).apply(c->v)))
            throw PreconditionError("equivalent_infinitesimals: input is not a cocycle");
    }
    Cochain diff = phi - psi;
    return in_span(eng_.cohomology(2).coboundaries, diff.v);
}

} // namespace leibcoh
