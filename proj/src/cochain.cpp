#include "leibcoh/cochain.hpp"

#include "leibcoh/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibcoh {

const char* theory_name(Theory t) {
    return t == Theory::lie ? "lie" : "leibniz";
}

std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, std::size_t q) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(q, 0);
    while (true) {
        out.push_back(cur);
        // odometer increment, last position fastest
        std::size_t pos = q;
        while (pos > 0) {
            --pos;
            if (++cur[pos] < n) break;
            cur[pos] = 0;
            if (pos == 0) return out;
        }
        if (q == 0) return out;
    }
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t q) {
    std::vector<std::vector<std::size_t>> out;
    if (q > n) return out;
    std::vector<std::size_t> cur(q);
    for (std::size_t i = 0; i < q; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (q == 0) return out;
        // advance the rightmost index that can still grow
        std::size_t pos = q;
        while (pos > 0) {
            --pos;
            if (cur[pos] < n - (q - pos)) {
                ++cur[pos];
                for (std::size_t r = pos + 1; r < q; ++r) cur[r] = cur[r - 1] + 1;
                break;
            }
            if (pos == 0) return out;
        }
    }
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::size_t all_tuple_rank(std::size_t n, const std::vector<std::size_t>& tuple) {
    std::size_t rank = 0;
    for (std::size_t x : tuple) rank = rank * n + x;
    return rank;
}

std::size_t increasing_tuple_rank(std::size_t n, std::size_t q,
                                  const std::vector<std::size_t>& tuple) {
    // lexicographic rank in the combinatorial number system
    std::size_t rank = 0;
    std::size_t prev = 0; // next admissible value
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t v = prev; v < tuple[i]; ++v)
            rank += binomial(n - 1 - v, q - 1 - i);
        prev = tuple[i] + 1;
    }
    return rank;
}

std::size_t cochain_dim(Theory theory, std::size_t q, std::size_t n) {
    if (theory == Theory::leibniz) {
        std::size_t tuples = 1;
        for (std::size_t i = 0; i < q; ++i) tuples *= n;
        return tuples * n;
    }
    return binomial(n, q) * n;
}

Cochain Cochain::zero(Theory theory, std::size_t degree, std::size_t dim) {
    Cochain c;
    c.theory = theory;
    c.degree = degree;
    c.dim = dim;
    c.v.assign(cochain_dim(theory, degree, dim), Rat(0));
    return c;
}

namespace {

// Sort a tuple, returning the permutation sign, or 0 for repeated entries.
int sort_sign(std::vector<std::size_t>& tuple) {
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i)
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j]) return 0;
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace

std::vector<Rat> Cochain::value_at(const std::vector<std::size_t>& tuple) const {
    if (tuple.size() != degree) throw std::invalid_argument("value_at: wrong tuple length");
    std::vector<Rat> out(dim, Rat(0));
    std::size_t base;
    int sign = 1;
    if (theory == Theory::leibniz) {
        base = all_tuple_rank(dim, tuple) * dim;
    } else {
        std::vector<std::size_t> sorted = tuple;
        sign = sort_sign(sorted);
        if (sign == 0) return out;
        base = increasing_tuple_rank(dim, degree, sorted) * dim;
    }
    for (std::size_t k = 0; k < dim; ++k)
        out[k] = sign == 1 ? v[base + k] : -v[base + k];
    return out;
}

void Cochain::set_value(const std::vector<std::size_t>& tuple, const std::vector<Rat>& value) {
    if (tuple.size() != degree || value.size() != dim)
        throw std::invalid_argument("set_value: dimension mismatch");
    std::size_t base;
    if (theory == Theory::leibniz) {
        base = all_tuple_rank(dim, tuple) * dim;
    } else {
        for (std::size_t i = 1; i < tuple.size(); ++i)
            if (tuple[i - 1] >= tuple[i])
                throw std::invalid_argument("set_value: lie tuple must be strictly increasing");
        base = increasing_tuple_rank(dim, degree, tuple) * dim;
    }
    for (std::size_t k = 0; k < dim; ++k) v[base + k] = value[k];
}

Cochain Cochain::operator+(const Cochain& other) const {
    if (theory != other.theory || degree != other.degree || dim != other.dim)
        throw std::invalid_argument("cochain +: shape mismatch");
    Cochain out = *this;
    for (std::size_t i = 0; i < v.size(); ++i) out.v[i] += other.v[i];
    return out;
}

Cochain Cochain::operator-(const Cochain& other) const {
    if (theory != other.theory || degree != other.degree || dim != other.dim)
        throw std::invalid_argument("cochain -: shape mismatch");
    Cochain out = *this;
    for (std::size_t i = 0; i < v.size(); ++i) out.v[i] -= other.v[i];
    return out;
}

Cochain Cochain::scaled(const Rat& s) const {
    Cochain out = *this;
    for (Rat& x : out.v) x *= s;
    return out;
}

Cochain to_leibniz(const Cochain& c) {
    if (c.theory == Theory::leibniz) return c;
    Cochain out = Cochain::zero(Theory::leibniz, c.degree, c.dim);
    for (const auto& tuple : all_tuples(c.dim, c.degree))
        out.set_value(tuple, c.value_at(tuple));
    return out;
}

std::optional<Cochain> try_restrict_to_lie(const Cochain& c) {
    if (c.theory == Theory::lie) return c;
    Cochain lie = Cochain::zero(Theory::lie, c.degree, c.dim);
    for (const auto& tuple : increasing_tuples(c.dim, c.degree))
        lie.set_value(tuple, c.value_at(tuple));
    if (to_leibniz(lie).v != c.v) return std::nullopt;
    return lie;
}

std::vector<Shuffle> shuffles(std::size_t p, std::size_t q) {
    std::vector<Shuffle> out;
    const std::size_t m = p + q;
    // Choose the first-block value set; both blocks are then forced.
    for (const auto& first : increasing_tuples(m, p)) {
        Shuffle s;
        s.img.resize(m);
        std::vector<bool> used(m, false);
        for (std::size_t i = 0; i < p; ++i) {
            s.img[i] = first[i];
            used[first[i]] = true;
        }
        std::size_t pos = p;
        for (std::size_t v = 0; v < m; ++v)
            if (!used[v]) s.img[pos++] = v;
        // parity by inversion count (m is tiny throughout)
        int inversions = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (s.img[i] > s.img[j]) ++inversions;
        s.sign = inversions % 2 == 0 ? 1 : -1;
        out.push_back(std::move(s));
    }
    return out;
}

MatrixQ leibniz_differential(const AlgebraSpec& a, std::size_t q) {
    if (!check_identities(a).leibniz_ok())
        throw PreconditionError("leibniz differential requested for a non-Leibniz algebra");
    const std::size_t n = a.dim;
    MatrixQ d(cochain_dim(Theory::leibniz, q + 1, n), cochain_dim(Theory::leibniz, q, n));

    for (const auto& y : all_tuples(n, q + 1)) {
        const std::size_t row_base = all_tuple_rank(n, y) * n;

        // [x_1, f(x_2..x_{q+1})]
        {
            std::vector<std::size_t> tail(y.begin() + 1, y.end());
            const std::size_t col_base = all_tuple_rank(n, tail) * n;
            for (std::size_t out = 0; out < n; ++out)
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.at(y[0], out, k).is_zero())
                        d.at(row_base + k, col_base + out) += a.at(y[0], out, k);
        }

        // (-1)^i [f(..^x_i..), x_i], i = 2..q+1 (1-based)
        for (std::size_t i = 1; i <= q; ++i) {
            std::vector<std::size_t> rest;
            rest.reserve(q);
            for (std::size_t t = 0; t <= q; ++t)
                if (t != i) rest.push_back(y[t]);
            const std::size_t col_base = all_tuple_rank(n, rest) * n;
            const int sign = (i + 1) % 2 == 0 ? 1 : -1; // (-1)^i with i 1-based = i+1 here
            for (std::size_t out = 0; out < n; ++out)
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.at(out, y[i], k).is_zero()) {
                        Rat c = a.at(out, y[i], k);
                        d.at(row_base + k, col_base + out) += sign == 1 ? c : -c;
                    }
        }

        // (-1)^{j+1} f(x_1.., [x_i,x_j], ..^x_j..), 1 <= i < j <= q+1 (1-based)
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i + 1; j <= q; ++j) {
                const int sign = (j + 2) % 2 == 0 ? 1 : -1; // (-1)^{j+1}, j 1-based = j+1 here
                for (std::size_t m = 0; m < n; ++m) {
                    if (a.at(y[i], y[j], m).is_zero()) continue;
                    std::vector<std::size_t> arg;
                    arg.reserve(q);
                    for (std::size_t t = 0; t <= q; ++t) {
                        if (t == j) continue;
                        arg.push_back(t == i ? m : y[t]);
                    }
                    const std::size_t col_base = all_tuple_rank(n, arg) * n;
                    Rat c = a.at(y[i], y[j], m);
                    if (sign == -1) c = -c;
                    for (std::size_t out = 0; out < n; ++out)
                        d.at(row_base + out, col_base + out) += c;
                }
            }
    }
    return d;
}

MatrixQ lie_differential(const AlgebraSpec& a, std::size_t q) {
    if (!check_identities(a).lie_ok())
        throw PreconditionError("lie differential requested for a non-Lie algebra");
    const std::size_t n = a.dim;
    MatrixQ d(cochain_dim(Theory::lie, q + 1, n), cochain_dim(Theory::lie, q, n));
    if (d.rows() == 0 || d.cols() == 0) return d;

    for (const auto& y : increasing_tuples(n, q + 1)) {
        const std::size_t row_base = increasing_tuple_rank(n, q + 1, y) * n;

        // (-1)^{s+t} c([g_s,g_t], rest), 1 <= s < t <= q+1 (1-based)
        for (std::size_t s = 0; s <= q; ++s)
            for (std::size_t t = s + 1; t <= q; ++t) {
                const int pair_sign = (s + t + 2) % 2 == 0 ? 1 : -1; // (-1)^{s+t}, 1-based
                for (std::size_t m = 0; m < n; ++m) {
                    if (a.at(y[s], y[t], m).is_zero()) continue;
                    std::vector<std::size_t> arg;
                    arg.reserve(q);
                    arg.push_back(m);
                    for (std::size_t u = 0; u <= q; ++u)
                        if (u != s && u != t) arg.push_back(y[u]);
                    int perm = sort_sign(arg);
                    if (perm == 0) continue;
                    Rat c = a.at(y[s], y[t], m) * Rat(pair_sign * perm);
                    const std::size_t col_base = increasing_tuple_rank(n, q, arg) * n;
                    for (std::size_t out = 0; out < n; ++out)
                        d.at(row_base + out, col_base + out) += c;
                }
            }

        // (-1)^{s+1} [g_s, c(rest)], s = 1..q+1 (1-based)
        for (std::size_t s = 0; s <= q; ++s) {
            const int sign = s % 2 == 0 ? 1 : -1; // (-1)^{s+1} with s 1-based = s+1 here
            std::vector<std::size_t> rest;
            rest.reserve(q);
            for (std::size_t u = 0; u <= q; ++u)
                if (u != s) rest.push_back(y[u]);
            const std::size_t col_base = increasing_tuple_rank(n, q, rest) * n;
            for (std::size_t out = 0; out < n; ++out)
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.at(y[s], out, k).is_zero()) {
                        Rat c = a.at(y[s], out, k);
                        d.at(row_base + k, col_base + out) += sign == 1 ? c : -c;
                    }
        }
    }
    return d;
}

Cochain circle_product(const Cochain& alpha_in, const Cochain& beta_in) {
    const Cochain alpha = to_leibniz(alpha_in);
    const Cochain beta = to_leibniz(beta_in);
    if (alpha.dim != beta.dim) throw std::invalid_argument("circle_product: dimension mismatch");
    if (alpha.degree == 0 || beta.degree == 0)
        throw std::invalid_argument("circle_product: cochains need at least one argument");
    const std::size_t n = alpha.dim;
    const std::size_t p = alpha.degree - 1;
    const std::size_t q = beta.degree - 1;

    Cochain out = Cochain::zero(Theory::leibniz, p + q + 1, n);

    // Per insertion point K, the shuffles of the trailing letters are the
    // same for every input tuple; hoist their enumeration.
    std::vector<std::vector<Shuffle>> sh(p + 1);
    for (std::size_t K = 0; K <= p; ++K) sh[K] = shuffles(q, p - K);

    for (const auto& y : all_tuples(n, p + q + 1)) {
        const std::size_t row_base = all_tuple_rank(n, y) * n;
        for (std::size_t K = 0; K <= p; ++K) {
            const int k_sign = (q * K) % 2 == 0 ? 1 : -1; // (-1)^{qK}
            for (const Shuffle& s : sh[K]) {
                // beta eats y[K] and the first q shuffled letters
                std::vector<std::size_t> barg;
                barg.reserve(q + 1);
                barg.push_back(y[K]);
                for (std::size_t i = 0; i < q; ++i) barg.push_back(y[K + 1 + s.img[i]]);
                const std::size_t bbase = all_tuple_rank(n, barg) * n;

                for (std::size_t mid = 0; mid < n; ++mid) {
                    const Rat& bc = beta.v[bbase + mid];
                    if (bc.is_zero()) continue;
                    std::vector<std::size_t> aarg;
                    aarg.reserve(p + 1);
                    for (std::size_t i = 0; i < K; ++i) aarg.push_back(y[i]);
                    aarg.push_back(mid);
                    for (std::size_t i = q; i < q + (p - K); ++i)
                        aarg.push_back(y[K + 1 + s.img[i]]);
                    const std::size_t abase = all_tuple_rank(n, aarg) * n;

                    Rat factor = bc;
                    if (k_sign * s.sign == -1) factor = -factor;
                    for (std::size_t res = 0; res < n; ++res)
                        if (!alpha.v[abase + res].is_zero())
                            out.v[row_base + res] += factor * alpha.v[abase + res];
                }
            }
        }
    }
    return out;
}

Cochain graded_bracket(const Cochain& alpha, const Cochain& beta) {
    const std::size_t p = alpha.degree - 1;
    const std::size_t q = beta.degree - 1;
    Cochain ab = circle_product(alpha, beta);
    Cochain ba = circle_product(beta, alpha);
    const int sign = (p * q + 1) % 2 == 0 ? 1 : -1;
    return sign == 1 ? ab + ba : ab - ba;
}

} // namespace leibcoh
