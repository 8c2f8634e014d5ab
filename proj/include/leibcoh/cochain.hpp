#pragma once

#include "leibcoh/algebra.hpp"
#include "leibcoh/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leibcoh {

enum class Theory { lie, leibniz };

const char* theory_name(Theory t);

// Argument tuples of a q-cochain, as lists of 0-based basis indices.
// Leibniz cochains run over all n^q tuples; Lie cochains are stored on
// strictly increasing tuples only. Both enumerations are lexicographic
// (first index most significant) and frozen: coordinate layouts, report
// output and test fixtures all depend on this order.
std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, std::size_t q);
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t q);

std::size_t binomial(std::size_t n, std::size_t k);

std::size_t all_tuple_rank(std::size_t n, const std::vector<std::size_t>& tuple);
std::size_t increasing_tuple_rank(std::size_t n, std::size_t q,
                                  const std::vector<std::size_t>& tuple);

// Dimension of the q-cochain space with adjoint coefficients:
// leibniz n^q * n, lie C(n,q) * n (zero for q > n).
std::size_t cochain_dim(Theory theory, std::size_t q, std::size_t n);

// A q-cochain as a flat coordinate vector. Coordinates are grouped by
// argument tuple (in the frozen enumeration order), output index innermost:
// coord = tuple_rank * n + out.
struct Cochain {
    Theory theory = Theory::leibniz;
    std::size_t degree = 0; // number of arguments
    std::size_t dim = 0;    // n
    std::vector<Rat> v;

    static Cochain zero(Theory theory, std::size_t degree, std::size_t dim);

    // Value on an arbitrary basis tuple. For Lie cochains the tuple is
    // sorted with its permutation sign; repeated indices give zero.
    std::vector<Rat> value_at(const std::vector<std::size_t>& tuple) const;

    // Set the value on a stored tuple (any tuple for leibniz, strictly
    // increasing for lie).
    void set_value(const std::vector<std::size_t>& tuple, const std::vector<Rat>& value);

    bool is_zero() const { return is_zero_vector(v); }

    Cochain operator+(const Cochain& other) const;
    Cochain operator-(const Cochain& other) const;
    Cochain scaled(const Rat& s) const;
};

// Antisymmetric extension of a Lie cochain to the full tuple grid.
Cochain to_leibniz(const Cochain& c);

// Inverse direction: succeeds iff the Leibniz cochain is alternating,
// i.e. equals the extension of its restriction to increasing tuples.
std::optional<Cochain> try_restrict_to_lie(const Cochain& c);

// A (p,q)-shuffle: a permutation img of {0,...,p+q-1} whose values are
// increasing on slots 0..p-1 and increasing on slots p..p+q-1.
struct Shuffle {
    std::vector<std::size_t> img;
    int sign = 1;
};

// All (p,q)-shuffles, enumerated lexicographically by the first-block
// image set. sign is the permutation parity.
std::vector<Shuffle> shuffles(std::size_t p, std::size_t q);

// Differential matrices C^q -> C^{q+1} for the adjoint module, in the
// frozen coordinate order. Preconditions: the algebra satisfies the
// corresponding identity (PreconditionError otherwise).
//
// Leibniz master formula:
//   (df)(x_1..x_{q+1}) = [x_1, f(x_2..x_{q+1})]
//     + sum_{i=2}^{q+1} (-1)^i [f(x_1..^x_i..x_{q+1}), x_i]
//     + sum_{i<j} (-1)^{j+1} f(x_1..x_{i-1}, [x_i,x_j], x_{i+1}..^x_j..)
//
// Lie (Chevalley-Eilenberg) formula, fixed so that d agrees with the
// Leibniz differential on alternating cochains:
//   (dc)(g_1..g_{q+1}) = sum_{s<t} (-1)^{s+t} c([g_s,g_t], g_1..^g_s..^g_t..)
//     + sum_s (-1)^{s+1} [g_s, c(g_1..^g_s..)]
MatrixQ leibniz_differential(const AlgebraSpec& a, std::size_t q);
MatrixQ lie_differential(const AlgebraSpec& a, std::size_t q);

// Circle product of cochains with p+1 and q+1 arguments (both at least 1),
// giving p+q+1 arguments:
//   (a o b)(x_1..x_{p+q+1}) = sum_{k=1}^{p+1} (-1)^{q(k-1)}
//     sum_{s in Sh(q, p+1-k)} sgn(s)
//       a(x_1..x_{k-1}, b(x_k, x_{s...}), x_{s...})
// where s shuffles the letters after position k, the first q of them into
// b and the rest into a. Lie inputs are extended first; the result is a
// leibniz cochain.
Cochain circle_product(const Cochain& alpha, const Cochain& beta);

// Graded bracket [a,b] = a o b + (-1)^{pq+1} b o a with p = args(a) - 1,
// q = args(b) - 1.
Cochain graded_bracket(const Cochain& alpha, const Cochain& beta);

} // namespace leibcoh
