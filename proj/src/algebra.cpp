#include "leibcoh/algebra.hpp"

#include "leibcoh/errors.hpp"
#include "leibcoh/matrix.hpp"

#include <stdexcept>

namespace leibcoh {

std::vector<Rat> AlgebraSpec::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    if (x.size() != dim || y.size() != dim)
        throw std::invalid_argument("bracket: dimension mismatch");
    std::vector<Rat> out(dim, Rat(0));
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Rat f = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!at(i, j, k).is_zero()) out[k] += f * at(i, j, k);
        }
    }
    return out;
}

AlgebraSpec AlgebraSpec::zero(std::size_t dim, std::string name) {
    AlgebraSpec a;
    a.dim = dim;
    a.c.assign(dim * dim * dim, Rat(0));
    a.name = std::move(name);
    return a;
}

IdentityReport check_identities(const AlgebraSpec& a) {
    IdentityReport report;
    const std::size_t n = a.dim;

    for (std::size_t i = 0; i < n && report.is_antisymmetric; ++i)
        for (std::size_t j = i; j < n && report.is_antisymmetric; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.at(i, j, k) + a.at(j, i, k) != 0) {
                    report.is_antisymmetric = false;
                    report.first_antisymmetry_failure = {i + 1, j + 1};
                    break;
                }

    auto basis = [n](std::size_t i) {
        std::vector<Rat> v(n, Rat(0));
        v[i] = Rat(1);
        return v;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto ei = basis(i), ej = basis(j), ek = basis(k);
                auto ij = a.bracket(ei, ej);
                auto jk = a.bracket(ej, ek);
                auto ki = a.bracket(ek, ei);
                auto ik = a.bracket(ei, ek);

                // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
                auto leib = a.bracket(ei, jk);
                auto t1 = a.bracket(ij, ek);
                auto t2 = a.bracket(ik, ej);
                for (std::size_t s = 0; s < n; ++s) leib[s] += t2[s] - t1[s];
                if (!is_zero_vector(leib))
                    report.leibniz_defects.push_back({i + 1, j + 1, k + 1, leib});

                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                auto jac = a.bracket(ij, ek);
                auto u1 = a.bracket(jk, ei);
                auto u2 = a.bracket(ki, ej);
                for (std::size_t s = 0; s < n; ++s) jac[s] += u1[s] + u2[s];
                if (!is_zero_vector(jac))
                    report.jacobi_defects.push_back({i + 1, j + 1, k + 1, jac});
            }

    return report;
}

namespace {

// Enter [e_i, e_j] = v on an increasing pair and its antisymmetric mirror.
void set_lie(AlgebraSpec& a, std::size_t i, std::size_t j, const std::vector<Rat>& v) {
    for (std::size_t k = 0; k < a.dim; ++k) {
        a.at(i, j, k) = v[k];
        a.at(j, i, k) = -v[k];
    }
}

void require_params(const std::string& name, const std::vector<Rat>& params, std::size_t count) {
    if (params.size() != count)
        throw ParseError("builtin '" + name + "' takes " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
}

} // namespace

AlgebraSpec builtin(const std::string& name, const std::vector<Rat>& params) {
    AlgebraSpec a = AlgebraSpec::zero(3, name);
    const Rat one(1);

    if (name == "n3" || name == "lambda3") {
        require_params(name, params, 0);
        set_lie(a, 1, 2, {one, Rat(0), Rat(0)});
    } else if (name == "r31") {
        require_params(name, params, 0);
        set_lie(a, 0, 2, {one, Rat(0), Rat(0)});
        set_lie(a, 1, 2, {Rat(0), one, Rat(0)});
    } else if (name == "sl2") {
        require_params(name, params, 0);
        set_lie(a, 0, 1, {Rat(0), Rat(0), one});
        set_lie(a, 0, 2, {Rat(0), one, Rat(0)});
        set_lie(a, 1, 2, {one, Rat(0), Rat(0)});
    } else if (name == "d") {
        require_params(name, params, 2);
        set_lie(a, 0, 2, {params[0], Rat(0), Rat(0)});
        set_lie(a, 1, 2, {one, params[1], Rat(0)});
    } else if (name == "lambda1") {
        require_params(name, params, 0);
    } else if (name == "lambda2") {
        require_params(name, params, 0);
        a.at(0, 0, 1) = one;
    } else if (name == "lambda4") {
        require_params(name, params, 1);
        a.at(1, 1, 0) = one;
        a.at(2, 2, 0) = params[0];
        a.at(1, 2, 0) = one;
    } else if (name == "lambda5") {
        require_params(name, params, 0);
        a.at(1, 1, 0) = one;
        a.at(2, 1, 0) = one;
        a.at(1, 2, 0) = one;
    } else if (name == "lambda6") {
        require_params(name, params, 0);
        a.at(2, 2, 0) = one;
        a.at(0, 2, 1) = one;
    } else {
        throw ParseError("unknown builtin algebra '" + name + "'");
    }
    return a;
}

std::vector<std::string> builtin_names() {
    return {"n3", "r31", "sl2", "d", "lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6"};
}

std::vector<std::size_t> lower_central_series(const AlgebraSpec& a) {
    const std::size_t n = a.dim;
    std::vector<std::size_t> dims{n};

    // Current term as a subspace; start with the whole space.
    std::vector<std::vector<Rat>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> v(n, Rat(0));
        v[i] = Rat(1);
        gens.push_back(std::move(v));
    }
    SubspaceBasis current = span_of(n, gens);

    while (true) {
        std::vector<std::vector<Rat>> next_gens;
        for (const auto& x : current.vectors)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Rat> ej(n, Rat(0));
                ej[j] = Rat(1);
                next_gens.push_back(a.bracket(x, ej));
            }
        SubspaceBasis next = span_of(n, next_gens);
        if (next.dim() == dims.back()) break; // stabilized above zero
        dims.push_back(next.dim());
        if (next.dim() == 0) break;
        current = std::move(next);
    }
    return dims;
}

bool is_nilpotent(const AlgebraSpec& a) {
    return lower_central_series(a).back() == 0;
}

AlgebraSpec transform_basis(const AlgebraSpec& a, const std::vector<std::vector<Rat>>& p_cols) {
    const std::size_t n = a.dim;
    if (p_cols.size() != n) throw std::invalid_argument("transform_basis: need dim columns");

    // Invert p by row-reducing [p | I].
    MatrixQ aug(n, 2 * n);
    for (std::size_t c = 0; c < n; ++c) {
        if (p_cols[c].size() != n) throw std::invalid_argument("transform_basis: column size");
        for (std::size_t r = 0; r < n; ++r) aug.at(r, c) = p_cols[c][r];
    }
    for (std::size_t r = 0; r < n; ++r) aug.at(r, n + r) = Rat(1);
    RrefResult rr = rref(std::move(aug));
    if (rr.pivots.size() != n || rr.pivots.back() >= n)
        throw std::invalid_argument("transform_basis: matrix not invertible");
    MatrixQ pinv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) pinv.at(r, c) = rr.m.at(r, n + c);

    AlgebraSpec out = AlgebraSpec::zero(n, a.name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rat> v = pinv.apply(a.bracket(p_cols[i], p_cols[j]));
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = v[k];
        }
    return out;
}

} // namespace leibcoh
