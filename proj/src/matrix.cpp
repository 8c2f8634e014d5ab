#include "leibcoh/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace leibcoh {

std::vector<Rat> MatrixQ::row(std::size_t r) const {
    std::vector<Rat> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

std::vector<Rat> MatrixQ::col(std::size_t c) const {
    std::vector<Rat> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

std::vector<Rat> MatrixQ::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

MatrixQ matmul(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    MatrixQ out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

RrefResult rref(MatrixQ m) {
    RrefResult result;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
        Rat inv = Rat(1) / m.at(pivot_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Rat factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(pivot_row, c);
        }
        result.pivots.push_back(col);
        ++pivot_row;
    }
    result.m = std::move(m);
    return result;
}

SubspaceBasis span_of(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& vectors) {
    MatrixQ m(vectors.size(), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient_dim)
            throw std::invalid_argument("span_of: vector dimension mismatch");
        for (std::size_t c = 0; c < ambient_dim; ++c) m.at(r, c) = vectors[r][c];
    }
    RrefResult rr = rref(std::move(m));
    SubspaceBasis basis;
    basis.ambient_dim = ambient_dim;
    basis.pivots = rr.pivots;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) basis.vectors.push_back(rr.m.row(r));
    return basis;
}

SubspaceBasis kernel_basis(const MatrixQ& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    std::vector<std::vector<Rat>> raw;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free_col] = Rat(1);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k)
            v[rr.pivots[k]] = -rr.m.at(k, free_col);
        raw.push_back(std::move(v));
    }
    return span_of(m.cols(), raw);
}

SubspaceBasis image_basis(const MatrixQ& m) {
    std::vector<std::vector<Rat>> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
    return span_of(m.rows(), cols);
}

CosetReduction reduce_mod_subspace(const SubspaceBasis& basis, std::vector<Rat> v) {
    if (v.size() != basis.ambient_dim)
        throw std::invalid_argument("reduce_mod_subspace: dimension mismatch");
    CosetReduction out;
    out.coefficients.reserve(basis.dim());
    for (std::size_t k = 0; k < basis.dim(); ++k) {
        Rat coeff = v[basis.pivots[k]];
        out.coefficients.push_back(coeff);
        if (coeff.is_zero()) continue;
        for (std::size_t c = 0; c < basis.ambient_dim; ++c)
            if (!basis.vectors[k][c].is_zero()) v[c] -= coeff * basis.vectors[k][c];
    }
    out.residue = std::move(v);
    return out;
}

bool in_span(const SubspaceBasis& basis, const std::vector<Rat>& v) {
    return is_zero_vector(reduce_mod_subspace(basis, v).residue);
}

bool spans_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    // Both sides are rref'd, so equality of spans is equality of bases.
    return a.ambient_dim == b.ambient_dim && a.pivots == b.pivots && a.vectors == b.vectors;
}

std::optional<std::vector<Rat>> solve(const MatrixQ& m, const std::vector<Rat>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    MatrixQ aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    RrefResult rr = rref(std::move(aug));
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        if (rr.pivots[k] == m.cols()) return std::nullopt; // pivot in the rhs column
    std::vector<Rat> x(m.cols(), Rat(0));
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        x[rr.pivots[k]] = rr.m.at(k, m.cols());
    return x;
}

bool is_zero_vector(const std::vector<Rat>& v) {
    for (const Rat& r : v)
        if (!r.is_zero()) return false;
    return true;
}

} // namespace leibcoh
