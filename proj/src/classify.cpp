#include "leibcoh/classify.hpp"

#include "leibcoh/errors.hpp"
#include "leibcoh/matrix.hpp"

#include <stdexcept>

namespace leibcoh {

namespace {

std::vector<Rat> basis_vec(std::size_t n, std::size_t i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = Rat(1);
    return v;
}

SubspaceBasis derived_subspace(const AlgebraSpec& a) {
    std::vector<std::vector<Rat>> gens;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            gens.push_back(a.bracket(basis_vec(a.dim, i), basis_vec(a.dim, j)));
    return span_of(a.dim, gens);
}

std::size_t center_dim(const AlgebraSpec& a) {
    const std::size_t n = a.dim;
    // stack [e_j, x] and [x, e_j] rows for all j
    MatrixQ m(2 * n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                m.at((j * n + k), i) = a.at(j, i, k);
                m.at(n * n + (j * n + k), i) = a.at(i, j, k);
            }
    return kernel_basis(m).dim();
}

} // namespace

LieClass classify_lie3(const AlgebraSpec& a) {
    if (a.dim != 3) throw PreconditionError("classification requires dimension 3");
    if (!check_identities(a).lie_ok())
        throw PreconditionError("classification requires a Lie algebra");

    LieClass out;
    SubspaceBasis derived = derived_subspace(a);
    out.derived_dim = derived.dim();
    out.center_dim = center_dim(a);

    switch (derived.dim()) {
    case 0:
        out.kind = LieKind::abelian;
        out.label = "abelian";
        return out;
    case 1: {
        // [g,g] central distinguishes the Heisenberg algebra.
        bool central = true;
        const auto& z = derived.vectors[0];
        for (std::size_t j = 0; j < 3 && central; ++j)
            central = is_zero_vector(a.bracket(z, basis_vec(3, j)));
        out.kind = central ? LieKind::n3 : LieKind::r2_plus_C;
        out.label = central ? "n3 (Heisenberg)" : "r2+C";
        return out;
    }
    case 2: {
        // The derived algebra is abelian and ad_x acts invertibly on it for
        // any x outside it; (tr)^2/det of that action is the isomorphism
        // invariant (r+s)^2/(rs) of the d(r:s) normal form.
        std::size_t xi = 0;
        while (xi < 3 && in_span(derived, basis_vec(3, xi))) ++xi;
        if (xi == 3) throw std::logic_error("no complement vector found");

        // columns of T: [x, b_i] expressed over the derived basis
        MatrixQ basis_m(3, 2);
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t r = 0; r < 3; ++r) basis_m.at(r, c) = derived.vectors[c][r];
        MatrixQ t(2, 2);
        for (std::size_t c = 0; c < 2; ++c) {
            auto img = a.bracket(basis_vec(3, xi), derived.vectors[c]);
            auto coeffs = solve(basis_m, img);
            if (!coeffs) throw std::logic_error("derived algebra is not ad-invariant");
            t.at(0, c) = (*coeffs)[0];
            t.at(1, c) = (*coeffs)[1];
        }
        Rat tr = t.at(0, 0) + t.at(1, 1);
        Rat det = t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0);
        if (det.is_zero()) throw std::logic_error("singular adjoint action on derived algebra");
        Rat inv = tr * tr / det;
        out.invariant = inv;

        if (inv.is_zero()) {
            out.kind = LieKind::r3_m1;
            out.label = "r3,-1";
        } else if (inv == 4) {
            // scalar action vs a Jordan block; both have invariant 4
            bool scalar = t.at(0, 1).is_zero() && t.at(1, 0).is_zero() && t.at(0, 0) == t.at(1, 1);
            out.kind = scalar ? LieKind::r3_1 : LieKind::r3;
            out.label = scalar ? "r3,1" : "r3";
        } else {
            out.kind = LieKind::d_family;
            out.label = "d-family, invariant = " + rat_str(inv);
        }
        return out;
    }
    default:
        out.kind = LieKind::sl2;
        out.label = "sl2";
        return out;
    }
}

LeibnizFingerprint fingerprint_leibniz3(const AlgebraSpec& a) {
    if (a.dim != 3) throw PreconditionError("fingerprint requires dimension 3");
    IdentityReport idr = check_identities(a);
    if (!idr.leibniz_ok())
        throw PreconditionError("fingerprint requires a Leibniz algebra");

    LeibnizFingerprint out;
    out.lcs_dims = lower_central_series(a);
    out.is_lie = idr.lie_ok();
    out.nilpotent = out.lcs_dims.back() == 0;
    if (!out.nilpotent) {
        out.matched_label = "not nilpotent";
        return out;
    }

    if (out.lcs_dims == std::vector<std::size_t>{3, 0}) {
        out.matched_label = "lambda1";
        return out;
    }
    if (out.lcs_dims == std::vector<std::size_t>{3, 2, 1, 0}) {
        out.matched_label = "lambda6";
        return out;
    }
    if (out.is_lie && out.lcs_dims == std::vector<std::size_t>{3, 1, 0}) {
        out.matched_label = "lambda3";
        return out;
    }

    SubspaceBasis derived = derived_subspace(a);
    if (derived.dim() != 1) {
        out.matched_label = "unrecognized";
        return out;
    }
    out.form_analyzed = true;

    // B(x,y) = coefficient of [x,y] along the L^2 line. The pairing with
    // the generator's pivot coordinate is enough: [x,y] is always in L^2.
    const std::size_t z = derived.pivots[0];
    const Rat zc = derived.vectors[0][z]; // 1 by rref normalization
    MatrixQ b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) b.at(i, j) = a.at(i, j, z) / zc;

    {
        // sanity: every bracket must lie on the generator line
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                auto v = a.bracket(basis_vec(3, i), basis_vec(3, j));
                for (std::size_t k = 0; k < 3; ++k) v[k] -= b.at(i, j) * derived.vectors[0][k];
                if (!is_zero_vector(v)) throw std::logic_error("bracket escapes derived line");
            }
    }

    out.bilinear_rank = rref(b).pivots.size();

    // Two-sided radical: vectors invisible to the form from either side.
    MatrixQ stacked(6, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            stacked.at(i, j) = b.at(i, j);
            stacked.at(3 + i, j) = b.at(j, i);
        }
    SubspaceBasis radical = kernel_basis(stacked);

    // Induced form on the quotient: use the non-pivot coordinates as a
    // complement basis; the form descends because the radical is two-sided.
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < 3; ++i) {
        bool is_rad_pivot = false;
        for (std::size_t p : radical.pivots) is_rad_pivot |= (p == i);
        if (!is_rad_pivot) comp.push_back(i);
    }
    const std::size_t vdim = comp.size();
    MatrixQ bv(vdim, vdim), sym(vdim, vdim), antisym(vdim, vdim);
    for (std::size_t i = 0; i < vdim; ++i)
        for (std::size_t j = 0; j < vdim; ++j) {
            bv.at(i, j) = b.at(comp[i], comp[j]);
        }
    for (std::size_t i = 0; i < vdim; ++i)
        for (std::size_t j = 0; j < vdim; ++j) {
            sym.at(i, j) = (bv.at(i, j) + bv.at(j, i)) / 2;
            antisym.at(i, j) = (bv.at(i, j) - bv.at(j, i)) / 2;
        }
    out.sym_rank = rref(sym).pivots.size();
    out.antisym_rank = rref(antisym).pivots.size();

    if (vdim == 2 && out.antisym_rank == 2) {
        Rat pf = antisym.at(0, 1);
        Rat det_s = sym.at(0, 0) * sym.at(1, 1) - sym.at(0, 1) * sym.at(1, 0);
        out.j_invariant = det_s / (pf * pf);
    }

    if (vdim == 1 && out.sym_rank == 1 && out.antisym_rank == 0)
        out.matched_label = "lambda2";
    else if (vdim == 2 && out.sym_rank == 2 && out.antisym_rank == 0)
        out.matched_label = "lambda5";
    else if (out.j_invariant)
        out.matched_label = "lambda4 family, j = " + rat_str(*out.j_invariant);
    else
        out.matched_label = "unrecognized";
    return out;
}

} // namespace leibcoh
