#pragma once

// Hand-pinned fixtures shared across the test files. Values were worked out
// independently of the library and are frozen here: if an engine change
// shifts a sign or a coordinate, these tests go red.

#include "leibcoh/algebra.hpp"
#include "leibcoh/cochain.hpp"

#include <vector>

namespace fixtures {

using leibcoh::AlgebraSpec;
using leibcoh::Cochain;
using leibcoh::Rat;
using leibcoh::Theory;

inline std::vector<Rat> vec3(Rat a, Rat b, Rat c) {
    return {std::move(a), std::move(b), std::move(c)};
}

inline AlgebraSpec heisenberg() { return leibcoh::builtin("n3", {}); }

// Degree-2 Leibniz cochains over the Heisenberg algebra: the pinned
// 11-element cocycle list. Index k is 1-based.
inline Cochain phi(int k) {
    Cochain c = Cochain::zero(Theory::leibniz, 2, 3);
    auto set = [&](std::size_t i, std::size_t j, std::size_t out, int s) {
        std::vector<Rat> v(3, Rat(0));
        v[out] = s;
        c.set_value({i, j}, v);
    };
    switch (k) {
        case 1: set(1, 2, 2, 1); set(2, 1, 2, -1); break;
        case 2: set(0, 1, 1, 1); set(1, 0, 1, -1); set(0, 2, 2, -1); set(2, 0, 2, 1); break;
        case 3: set(0, 1, 2, 1); set(1, 0, 2, -1); break;
        case 4: set(0, 2, 0, 1); set(2, 0, 0, -1); break;
        case 5: set(0, 2, 1, 1); set(2, 0, 1, -1); break;
        case 6: set(1, 1, 0, 1); break;
        case 7: set(1, 2, 0, 1); break;
        case 8: set(1, 2, 1, 1); set(2, 1, 1, -1); break;
        case 9: set(0, 1, 0, 1); set(1, 0, 0, -1); break;
        case 10: set(2, 1, 0, 1); break;
        case 11: set(2, 2, 0, 1); break;
        default: throw std::out_of_range("phi index");
    }
    return c;
}

// Degree-2 Lie cocycles over the Heisenberg algebra, the pinned 5-element
// list (antisymmetrizing f(k) gives phi(k) for k = 1..5).
inline Cochain f(int k) {
    Cochain c = Cochain::zero(Theory::lie, 2, 3);
    auto set = [&](std::size_t i, std::size_t j, std::size_t out, int s) {
        std::vector<Rat> v(3, Rat(0));
        v[out] = s;
        c.set_value({i, j}, v);
    };
    switch (k) {
        case 1: set(1, 2, 2, 1); break;
        case 2: set(0, 1, 1, 1); set(0, 2, 2, -1); break;
        case 3: set(0, 1, 2, 1); break;
        case 4: set(0, 2, 0, 1); break;
        case 5: set(0, 2, 1, 1); break;
        default: throw std::out_of_range("f index");
    }
    return c;
}

// A hand-derived basis of the degree-2 Leibniz coboundaries over the
// Heisenberg algebra (images of the three obvious linear maps).
inline Cochain coboundary_b(int k) {
    Cochain c = Cochain::zero(Theory::leibniz, 2, 3);
    auto set = [&](std::size_t i, std::size_t j, std::size_t out, int s) {
        std::vector<Rat> v(3, Rat(0));
        v[out] = s;
        c.set_value({i, j}, v);
    };
    switch (k) {
        case 1: set(0, 2, 0, 1); set(2, 0, 0, -1); set(1, 2, 1, -1); set(2, 1, 1, 1); break;
        case 2: set(0, 1, 0, -1); set(1, 0, 0, 1); set(1, 2, 2, -1); set(2, 1, 2, 1); break;
        case 3: set(1, 2, 0, 1); set(2, 1, 0, -1); break;
        default: throw std::out_of_range("coboundary index");
    }
    return c;
}

// Base algebra shifted by t times a degree-2 direction (any theory).
inline AlgebraSpec deform(const AlgebraSpec& a, const Cochain& dir, const Rat& t) {
    AlgebraSpec out = a;
    out.name = "";
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            auto v = dir.value_at({i, j});
            for (std::size_t k = 0; k < a.dim; ++k) out.at(i, j, k) += t * v[k];
        }
    return out;
}

// The five classical deformation rays of the Heisenberg algebra.
inline AlgebraSpec ray(int k, const Rat& t) { return deform(heisenberg(), f(k), t); }

} // namespace fixtures
