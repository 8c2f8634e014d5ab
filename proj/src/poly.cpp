#include "leibcoh/poly.hpp"

#include <stdexcept>

namespace leibcoh {

TruncPoly TruncPoly::zero(std::size_t m) {
    TruncPoly p;
    p.m = m;
    p.c0 = Rat(0);
    p.lin.assign(m, Rat(0));
    p.quad.assign(quad_size(m), Rat(0));
    return p;
}

TruncPoly TruncPoly::constant(std::size_t m, const Rat& c) {
    TruncPoly p = zero(m);
    p.c0 = c;
    return p;
}

std::size_t TruncPoly::quad_index(std::size_t m, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (j >= m) throw std::invalid_argument("quad_index: parameter out of range");
    return i * m - i * (i - 1) / 2 + (j - i);
}

bool TruncPoly::is_zero() const {
    if (!c0.is_zero()) return false;
    for (const Rat& c : lin)
        if (!c.is_zero()) return false;
    for (const Rat& c : quad)
        if (!c.is_zero()) return false;
    return true;
}

TruncPoly TruncPoly::operator+(const TruncPoly& other) const {
    if (m != other.m) throw std::invalid_argument("poly +: parameter count mismatch");
    TruncPoly out = *this;
    out.c0 += other.c0;
    for (std::size_t i = 0; i < m; ++i) out.lin[i] += other.lin[i];
    for (std::size_t i = 0; i < quad.size(); ++i) out.quad[i] += other.quad[i];
    return out;
}

TruncPoly TruncPoly::operator-(const TruncPoly& other) const {
    if (m != other.m) throw std::invalid_argument("poly -: parameter count mismatch");
    TruncPoly out = *this;
    out.c0 -= other.c0;
    for (std::size_t i = 0; i < m; ++i) out.lin[i] -= other.lin[i];
    for (std::size_t i = 0; i < quad.size(); ++i) out.quad[i] -= other.quad[i];
    return out;
}

TruncPoly TruncPoly::operator*(const TruncPoly& other) const {
    if (m != other.m) throw std::invalid_argument("poly *: parameter count mismatch");
    TruncPoly out = zero(m);
    out.c0 = c0 * other.c0;
    for (std::size_t i = 0; i < m; ++i)
        out.lin[i] = c0 * other.lin[i] + other.c0 * lin[i];
    for (std::size_t i = 0; i < quad.size(); ++i)
        out.quad[i] = c0 * other.quad[i] + other.c0 * quad[i];
    for (std::size_t i = 0; i < m; ++i) {
        if (lin[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (other.lin[j].is_zero()) continue;
            out.quad[quad_index(m, i, j)] += lin[i] * other.lin[j];
        }
    }
    return out;
}

TruncPoly TruncPoly::scaled(const Rat& s) const {
    TruncPoly out = *this;
    out.c0 *= s;
    for (Rat& c : out.lin) c *= s;
    for (Rat& c : out.quad) c *= s;
    return out;
}

QuadraticRelation QuadraticRelation::normalized(std::size_t m, std::vector<Rat> coeffs) {
    if (coeffs.size() != TruncPoly::quad_size(m))
        throw std::invalid_argument("relation: coefficient count mismatch");
    Rat lead(0);
    for (const Rat& c : coeffs)
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    if (lead.is_zero()) throw std::invalid_argument("relation: zero form");
    if (lead != 1)
        for (Rat& c : coeffs) c /= lead;
    QuadraticRelation r;
    r.m = m;
    r.coeffs = std::move(coeffs);
    return r;
}

namespace {

struct Term {
    Rat coeff;
    std::string body; // "" for the constant term
};

std::string param(std::size_t i) { return "t" + std::to_string(i + 1); }

// Ordered terms: linear by index, quadratic by pair, constant last.
std::vector<Term> poly_terms(const TruncPoly& p) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.m; ++i)
        if (!p.lin[i].is_zero()) terms.push_back({p.lin[i], param(i)});
    for (std::size_t i = 0; i < p.m; ++i)
        for (std::size_t j = i; j < p.m; ++j) {
            const Rat& c = p.quad[TruncPoly::quad_index(p.m, i, j)];
            if (!c.is_zero()) terms.push_back({c, param(i) + "*" + param(j)});
        }
    if (!p.c0.is_zero()) terms.push_back({p.c0, ""});
    return terms;
}

// "2*t1", "t3*t4", "1/2" -- unsigned part of one term.
std::string term_body(const Rat& abs_coeff, const std::string& body) {
    if (body.empty()) return rat_str(abs_coeff);
    if (abs_coeff == 1) return body;
    return rat_str(abs_coeff) + "*" + body;
}

std::string join_terms(const std::vector<Term>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const bool neg = terms[i].coeff < 0;
        const Rat mag = neg ? Rat(-terms[i].coeff) : terms[i].coeff;
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_body(mag, terms[i].body);
    }
    return out;
}

} // namespace

std::string render_poly(const TruncPoly& p) {
    std::vector<Term> terms = poly_terms(p);
    if (terms.empty()) return "0";
    return join_terms(terms);
}

std::string render_relation(const QuadraticRelation& r) {
    TruncPoly p = TruncPoly::zero(r.m);
    p.quad = r.coeffs;
    return render_poly(p);
}

std::string render_poly_vector(const std::vector<TruncPoly>& coeffs) {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const TruncPoly& p = coeffs[k];
        if (p.is_zero()) continue;
        std::vector<Term> terms = poly_terms(p);
        const std::string basis = "e" + std::to_string(k + 1);

        bool neg = false;
        std::string body;
        if (terms.size() == 1) {
            neg = terms[0].coeff < 0;
            const Rat mag = neg ? Rat(-terms[0].coeff) : terms[0].coeff;
            std::string t = term_body(mag, terms[0].body);
            body = t == "1" ? basis : t + " " + basis;
        } else {
            body = "(" + join_terms(terms) + ") " + basis;
        }

        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return first ? "0" : out;
}

std::string render_rat_vector(const std::vector<Rat>& coeffs) {
    std::vector<TruncPoly> polys;
    polys.reserve(coeffs.size());
    for (const Rat& c : coeffs) polys.push_back(TruncPoly::constant(0, c));
    return render_poly_vector(polys);
}

} // namespace leibcoh
