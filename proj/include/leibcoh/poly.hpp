#pragma once

#include "leibcoh/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leibcoh {

// Polynomial in parameters t1..tm truncated after total degree 2. Quadratic
// coefficients are stored on unordered pairs i <= j (0-based) in
// lexicographic order; see quad_index.
struct TruncPoly {
    std::size_t m = 0;
    Rat c0;
    std::vector<Rat> lin;  // size m
    std::vector<Rat> quad; // size m(m+1)/2

    static TruncPoly zero(std::size_t m);
    static TruncPoly constant(std::size_t m, const Rat& c);

    static std::size_t quad_size(std::size_t m) { return m * (m + 1) / 2; }
    static std::size_t quad_index(std::size_t m, std::size_t i, std::size_t j);

    bool is_zero() const;
    bool operator==(const TruncPoly& other) const = default;

    TruncPoly operator+(const TruncPoly& other) const;
    TruncPoly operator-(const TruncPoly& other) const;
    TruncPoly operator*(const TruncPoly& other) const; // truncating
    TruncPoly scaled(const Rat& s) const;
};

// A nonzero quadratic form in t1..tm, normalized so that the first nonzero
// coefficient (in pair-lexicographic order) is 1.
struct QuadraticRelation {
    std::size_t m = 0;
    std::vector<Rat> coeffs; // size m(m+1)/2, same layout as TruncPoly::quad

    static QuadraticRelation normalized(std::size_t m, std::vector<Rat> coeffs);
};

// Rendering, frozen for report stability.
//
//   monomials        "t2", "t1*t4", "2*t1", "1/2*t2*t3"
//   polynomials      "t2 + t1*t4", "t7 - 1", "-t1 + 2*t3"
//                    (linear terms by index, then quadratic terms by pair,
//                    constant last; signs pulled into the separators)
//   vector lines     "e1 + t1 e3", "(t7 - 1) e1 - t1 e3", "0"
//                    (single-monomial coefficients stay bare, multi-term
//                    coefficients are parenthesized, unit coefficients are
//                    dropped)
std::string render_poly(const TruncPoly& p);
std::string render_relation(const QuadraticRelation& r);
std::string render_poly_vector(const std::vector<TruncPoly>& coeffs);
std::string render_rat_vector(const std::vector<Rat>& coeffs);

} // namespace leibcoh
