#pragma once

#include "leibcoh/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leibcoh {

// Dense matrix over Q, row-major. Small dimensions throughout (the largest
// matrices in practice are differentials of 3-dimensional algebras, 81x27),
// so no sparsity games.
class MatrixQ {
public:
    MatrixQ() : rows_(0), cols_(0) {}
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rat> row(std::size_t r) const;
    std::vector<Rat> col(std::size_t c) const;

    // Matrix times column vector.
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    bool operator==(const MatrixQ& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

MatrixQ matmul(const MatrixQ& a, const MatrixQ& b);

struct RrefResult {
    MatrixQ m;
    std::vector<std::size_t> pivots; // pivot column per pivot row, in row order
};

// Reduced row echelon form: leading entries 1, zeros above and below.
// Pivot search takes the first row with a nonzero entry in the current
// column, which makes the output a deterministic function of the input.
RrefResult rref(MatrixQ m);

// A subspace of Q^ambient_dim given by an rref'd list of row vectors.
// pivots[k] is the pivot coordinate of vectors[k]; vectors are linearly
// independent by construction.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<Rat>> vectors;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return vectors.size(); }
};

// Canonical (rref) basis for the span of the given vectors.
SubspaceBasis span_of(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& vectors);

// Right kernel of m, as a canonical subspace of Q^cols. The raw kernel
// vectors (one per free column, free variable set to 1) are re-reduced so
// the result satisfies the SubspaceBasis invariant.
SubspaceBasis kernel_basis(const MatrixQ& m);

// Column span of m, canonicalized.
SubspaceBasis image_basis(const MatrixQ& m);

struct CosetReduction {
    std::vector<Rat> residue;      // v minus its projection onto the subspace
    std::vector<Rat> coefficients; // basis coefficients of the removed part
};

// Reduce v modulo the subspace: subtract multiples of basis vectors to zero
// out every pivot coordinate. Because the basis is rref'd, coefficient k is
// just v[pivots[k]] and the residue is a canonical coset representative.
CosetReduction reduce_mod_subspace(const SubspaceBasis& basis, std::vector<Rat> v);

bool in_span(const SubspaceBasis& basis, const std::vector<Rat>& v);
bool spans_equal(const SubspaceBasis& a, const SubspaceBasis& b);

// One solution of m x = rhs (free variables set to 0), or nullopt if the
// system is inconsistent.
std::optional<std::vector<Rat>> solve(const MatrixQ& m, const std::vector<Rat>& rhs);

bool is_zero_vector(const std::vector<Rat>& v);

} // namespace leibcoh
