#include "specon/lie.hpp"

#include "specon/kernels.hpp"

namespace specon {

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw structural_error("bracket arity mismatch");
    Vec z(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (is_zero(x[i])) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (is_zero(y[j])) continue;
            Rat f = x[i] * y[j];
            for (size_t k = 0; k < dim; ++k) z[k] += f * c(i, j, k);
        }
    }
    return z;
}

LieValidation validate_lie(const LieAlgebra& l) {
    LieValidation rep;
    size_t n = l.dim;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (l.c(i, j, k) != -l.c(j, i, k))
                    rep.violations.push_back({"antisymmetry", {i, j, k}});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t t = j + 1; t < n; ++t) {
                bool ok = true;
                for (size_t k = 0; k < n && ok; ++k) {
                    Rat s = 0;
                    for (size_t m = 0; m < n; ++m)
                        s += l.c(i, j, m) * l.c(m, t, k) + l.c(j, t, m) * l.c(m, i, k) +
                             l.c(t, i, m) * l.c(m, j, k);
                    if (!is_zero(s)) ok = false;
                }
                if (!ok) rep.violations.push_back({"jacobi", {i, j, t}});
            }
    rep.valid = rep.violations.empty();
    return rep;
}

Mat ad(const LieAlgebra& l, const Vec& x) {
    if (x.size() != l.dim) throw structural_error("ad argument of wrong length");
    Mat m(l.dim, l.dim);
    for (size_t j = 0; j < l.dim; ++j)
        for (size_t i = 0; i < l.dim; ++i) {
            if (is_zero(x[i])) continue;
            for (size_t k = 0; k < l.dim; ++k) m(k, j) += x[i] * l.c(i, j, k);
        }
    return m;
}

std::vector<Mat> basis_adjoints(const LieAlgebra& l) {
    std::vector<Mat> ads;
    ads.reserve(l.dim);
    for (size_t i = 0; i < l.dim; ++i) {
        Mat m(l.dim, l.dim);
        for (size_t j = 0; j < l.dim; ++j)
            for (size_t k = 0; k < l.dim; ++k) m(k, j) = l.c(i, j, k);
        ads.push_back(std::move(m));
    }
    return ads;
}

Mat killing(const LieAlgebra& l) { return kernels::trace_form(basis_adjoints(l)); }

LowerCentralSeries lower_central_series(const LieAlgebra& l) {
    LowerCentralSeries out;
    Subspace g = Subspace::full(l.dim);
    out.chain.push_back(g);
    while (true) {
        Subspace next = bracket_subspaces(l, g, out.chain.back());
        if (next == out.chain.back()) break;
        out.chain.push_back(next);
        if (next.is_zero()) break;
        if (out.chain.size() > l.dim + 2) break;  // unreachable by dimension descent
    }
    out.nilpotent = out.chain.back().is_zero();
    if (out.nilpotent) out.nil_class = out.chain.size() - 1;
    return out;
}

bool is_semisimple(const LieAlgebra& l) {
    if (l.dim == 0) return true;
    return det(killing(l)) != 0;
}

Subspace bracket_subspaces(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != l.dim || v.ambient_dim() != l.dim)
        throw structural_error("bracket_subspaces ambient dimension mismatch");
    std::vector<Vec> products;
    for (const Vec& x : u.basis())
        for (const Vec& y : v.basis()) products.push_back(l.bracket(x, y));
    return Subspace::span(l.dim, products);
}

Subspace centralizer_in(const LieAlgebra& l, const Subspace& w, const Subspace& u) {
    if (w.ambient_dim() != l.dim || u.ambient_dim() != l.dim)
        throw structural_error("centralizer ambient dimension mismatch");
    if (w.is_zero() || u.is_zero()) return w;
    // Rows: for each u-basis vector and ambient coordinate k,
    // sum_i s_i [w_i, u_j]_k = 0 over the W-coordinates s.
    std::vector<std::vector<Vec>> brackets(w.dim());
    for (size_t i = 0; i < w.dim(); ++i)
        for (const Vec& y : u.basis()) brackets[i].push_back(l.bracket(w.basis()[i], y));
    Mat sys(u.dim() * l.dim, w.dim());
    for (size_t i = 0; i < w.dim(); ++i)
        for (size_t j = 0; j < u.dim(); ++j)
            for (size_t k = 0; k < l.dim; ++k) sys(j * l.dim + k, i) = brackets[i][j][k];
    Subspace coeff = nullspace(sys);
    std::vector<Vec> vecs;
    for (const Vec& s : coeff.basis()) vecs.push_back(w.from_coords(s));
    return Subspace::span(l.dim, vecs);
}

std::optional<std::pair<size_t, size_t>> homomorphism_violation(const Representation& rep) {
    size_t q = rep.acting.dim;
    if (rep.images.size() != q) throw structural_error("representation image count mismatch");
    for (size_t i = 0; i < q; ++i)
        for (size_t j = i + 1; j < q; ++j) {
            Mat lhs(rep.module_dim, rep.module_dim);
            for (size_t k = 0; k < q; ++k)
                if (!is_zero(rep.acting.c(i, j, k))) lhs = lhs + rep.acting.c(i, j, k) * rep.images[k];
            if (!(lhs == commutator(rep.images[i], rep.images[j]))) return std::make_pair(i, j);
        }
    return std::nullopt;
}

LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s) {
    LieAlgebra sub(s.dim());
    for (size_t i = 0; i < s.dim(); ++i)
        for (size_t j = 0; j < s.dim(); ++j) {
            Vec br = l.bracket(s.basis()[i], s.basis()[j]);
            if (!s.contains(br)) throw structural_error("subspace not closed under bracket");
            Vec co = s.coords(br);
            for (size_t k = 0; k < s.dim(); ++k) sub.c(i, j, k) = co[k];
        }
    return sub;
}

}  // namespace specon
