#include "specon/products.hpp"

#include <set>

#include "specon/kernels.hpp"

namespace specon {

std::string solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::complete: return "complete";
        case SolveStatus::complete_linear_subvariety: return "complete-linear-subvariety";
        case SolveStatus::constraints_only: return "constraints-only";
    }
    return "?";
}

Mat left_operator(const ProductTensor& t, const Vec& u) {
    if (u.size() != t.dim) throw structural_error("left_operator argument of wrong length");
    Mat m(t.dim, t.dim);
    for (size_t i = 0; i < t.dim; ++i) {
        if (is_zero(u[i])) continue;
        for (size_t j = 0; j < t.dim; ++j)
            for (size_t k = 0; k < t.dim; ++k) m(k, j) += u[i] * t.a(i, j, k);
    }
    return m;
}

std::vector<ProductTensor> candidate_space(const SymmetricPair& p) {
    size_t pm = p.m_dim();
    std::vector<ProductTensor> basis;
    if (pm == 0) return basis;
    IsotropyData iso = isotropy(p);
    Mat rows = kernels::product_constraint_rows(pm, iso.rep.images);
    Subspace ker = nullspace(rows);
    for (const Vec& v : ker.basis()) {
        ProductTensor t(pm);
        for (size_t i = 0; i < pm * pm * pm; ++i) t.a.a[i] = v[i];
        basis.push_back(std::move(t));
    }
    return basis;
}

namespace {

ProductTensor combine(const std::vector<ProductTensor>& basis, const Vec& w) {
    if (basis.empty()) throw structural_error("empty candidate basis");
    ProductTensor t(basis[0].dim);
    for (size_t m = 0; m < basis.size(); ++m) {
        if (is_zero(w[m])) continue;
        for (size_t i = 0; i < t.a.a.size(); ++i) t.a.a[i] += w[m] * basis[m].a.a[i];
    }
    return t;
}

std::vector<MPoly> associativity_system(const std::vector<ProductTensor>& basis) {
    size_t w = basis.size();
    size_t p = basis[0].dim;
    std::set<MPoly> sys;
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j)
            for (size_t l = 0; l < p; ++l)
                for (size_t k = 0; k < p; ++k) {
                    MPoly q(w);
                    for (size_t m = 0; m < w; ++m)
                        for (size_t n = 0; n < w; ++n) {
                            Rat c = 0;
                            for (size_t r = 0; r < p; ++r)
                                c += basis[m].a(i, j, r) * basis[n].a(r, l, k) -
                                     basis[m].a(j, l, r) * basis[n].a(i, r, k);
                            if (is_zero(c)) continue;
                            MPoly::Expo e(w, 0);
                            ++e[m];
                            ++e[n];
                            q.add_term(e, c);
                        }
                    if (q.is_zero()) continue;
                    sys.insert(q.normalized());
                }
    return {sys.begin(), sys.end()};
}

}  // namespace

SolutionSet solve_special(const SymmetricPair& p, size_t max_params) {
    SolutionSet out;
    out.candidate_basis = candidate_space(p);
    size_t w = out.candidate_basis.size();
    size_t pm = p.m_dim();
    out.solutions.push_back(ProductTensor(pm));  // the trivial product
    if (w == 0) {
        out.status = SolveStatus::complete;
        return out;
    }
    out.quadratic_constraints = associativity_system(out.candidate_basis);
    if (out.quadratic_constraints.empty()) {
        out.status = SolveStatus::complete_linear_subvariety;
        AffineComponent all;
        all.point = Vec(w);
        for (size_t i = 0; i < w; ++i) {
            Vec dir(w);
            dir[i] = 1;
            all.directions.push_back(dir);
        }
        out.components.push_back(all);
        for (const ProductTensor& b : out.candidate_basis) out.solutions.push_back(b);
        return out;
    }
    if (w > max_params) {
        out.status = SolveStatus::constraints_only;
        out.notes.push_back("candidate space dimension exceeds max_params; system emitted");
        return out;
    }
    PolySolveResult res = solve_poly_system(w, out.quadratic_constraints);
    out.components = res.components;
    out.notes = res.notes;
    for (const MPoly& r : res.residual) out.notes.push_back("residual: " + r.str());
    out.status = res.complete ? SolveStatus::complete : SolveStatus::constraints_only;
    std::vector<ProductTensor> reps;
    for (const AffineComponent& c : res.components) {
        reps.push_back(combine(out.candidate_basis, c.point));
        for (const Vec& d : c.directions) {
            Vec pt = c.point;
            for (size_t i = 0; i < w; ++i) pt[i] += d[i];
            reps.push_back(combine(out.candidate_basis, pt));
        }
    }
    for (ProductTensor& t : reps) {
        bool seen = false;
        for (const ProductTensor& s : out.solutions) seen = seen || s == t;
        if (!seen) out.solutions.push_back(std::move(t));
    }
    return out;
}

VerifyReport verify_special(const SymmetricPair& p, const ProductTensor& t) {
    if (t.dim != p.m_dim()) throw structural_error("product tensor dimension mismatch");
    VerifyReport rep;
    size_t pm = t.dim;

    rep.commutative = true;
    for (size_t i = 0; i < pm && rep.commutative; ++i)
        for (size_t j = i + 1; j < pm && rep.commutative; ++j)
            for (size_t k = 0; k < pm; ++k)
                if (t.a(i, j, k) != t.a(j, i, k)) {
                    rep.commutative = false;
                    if (!rep.first_witness) rep.first_witness = LieViolation{"commutativity", {i, j, k}};
                    break;
                }

    auto assoc = kernels::associator_violation(t.a);
    rep.associative = !assoc.has_value();
    if (assoc && !rep.first_witness)
        rep.first_witness = LieViolation{"associativity", {(*assoc)[0], (*assoc)[1], (*assoc)[2]}};

    IsotropyData iso = isotropy(p);
    rep.invariant = true;
    for (size_t s = 0; s < iso.rep.images.size() && rep.invariant; ++s) {
        const Mat& g = iso.rep.images[s];
        for (size_t i = 0; i < pm && rep.invariant; ++i)
            for (size_t j = 0; j < pm && rep.invariant; ++j)
                for (size_t k = 0; k < pm; ++k) {
                    Rat v = 0;
                    for (size_t l = 0; l < pm; ++l)
                        v += g(k, l) * t.a(i, j, l) - g(l, i) * t.a(l, j, k) -
                             g(l, j) * t.a(i, l, k);
                    if (!is_zero(v)) {
                        rep.invariant = false;
                        if (!rep.first_witness)
                            rep.first_witness = LieViolation{"invariance", {s, i, j}};
                        break;
                    }
                }
    }
    return rep;
}

Tensor3 torsion(const ProductTensor& t) {
    Tensor3 tor(t.dim);
    for (size_t i = 0; i < t.dim; ++i)
        for (size_t j = 0; j < t.dim; ++j)
            for (size_t k = 0; k < t.dim; ++k) tor(i, j, k) = t.a(i, j, k) - t.a(j, i, k);
    return tor;
}

CurvatureTensor curvature(const SymmetricPair& p, const ProductTensor& t) {
    size_t pm = p.m_dim();
    if (t.dim != pm) throw structural_error("product tensor dimension mismatch");
    Tensor4 dbl(pm);
    for (size_t i = 0; i < pm; ++i)
        for (size_t j = 0; j < pm; ++j) {
            Vec hv = p.algebra.bracket(p.m.basis()[i], p.m.basis()[j]);
            for (size_t l = 0; l < pm; ++l) {
                Vec w = p.algebra.bracket(hv, p.m.basis()[l]);
                Vec c = p.m.coords(w);
                for (size_t k = 0; k < pm; ++k) dbl(i, j, l, k) = c[k];
            }
        }
    return CurvatureTensor{pm, kernels::curvature_tensor(t.a, dbl)};
}

SemiSymmetryReport semi_symmetry_check(const CurvatureTensor& r) {
    SemiSymmetryReport rep;
    rep.witness = kernels::semi_symmetry_violation(r.r);
    rep.ok = !rep.witness.has_value();
    return rep;
}

HolonomyAlgebra holonomy(const SymmetricPair& p, const ProductTensor& t) {
    VerifyReport v = verify_special(p, t);
    if (!v.ok()) {
        std::string which = !v.commutative ? "commutativity"
                            : !v.associative ? "associativity"
                                             : "invariance";
        throw rejection("product is not special: " + which + " fails",
                        v.first_witness ? v.first_witness->indices : std::vector<size_t>{});
    }
    size_t pm = p.m_dim();
    std::vector<Vec> gens;
    // ad restricted to m over a basis of [m,m].
    Subspace mm = bracket_subspaces(p.algebra, p.m, p.m);
    for (const Vec& h : mm.basis()) {
        Mat op(pm, pm);
        for (size_t l = 0; l < pm; ++l) {
            Vec w = p.algebra.bracket(h, p.m.basis()[l]);
            Vec c = p.m.coords(w);
            for (size_t k = 0; k < pm; ++k) op(k, l) = c[k];
        }
        gens.push_back(op.a);
    }
    // alpha_w over a basis of [[m,m],m].
    Subspace mmm = bracket_subspaces(p.algebra, mm, p.m);
    for (const Vec& w : mmm.basis()) {
        Mat op = left_operator(t, p.m.coords(w));
        gens.push_back(op.a);
    }
    HolonomyAlgebra hol;
    hol.module_dim = pm;
    hol.generators = Subspace::span(pm * pm, gens);
    hol.closed = true;
    for (size_t i = 0; i < hol.generators.dim() && hol.closed; ++i)
        for (size_t j = i + 1; j < hol.generators.dim(); ++j) {
            Mat x(pm, pm), y(pm, pm);
            x.a = hol.generators.basis()[i];
            y.a = hol.generators.basis()[j];
            if (!hol.generators.contains(commutator(x, y).a)) {
                hol.closed = false;
                break;
            }
        }
    return hol;
}

VerifyReport verify_poisson(const LieAlgebra& l, const ProductTensor& t) {
    if (t.dim != l.dim) throw structural_error("product tensor dimension mismatch");
    VerifyReport rep;
    size_t n = l.dim;

    rep.commutative = true;
    for (size_t i = 0; i < n && rep.commutative; ++i)
        for (size_t j = i + 1; j < n && rep.commutative; ++j)
            for (size_t k = 0; k < n; ++k)
                if (t.a(i, j, k) != t.a(j, i, k)) {
                    rep.commutative = false;
                    if (!rep.first_witness) rep.first_witness = LieViolation{"commutativity", {i, j, k}};
                    break;
                }

    auto assoc = kernels::associator_violation(t.a);
    rep.associative = !assoc.has_value();
    if (assoc && !rep.first_witness)
        rep.first_witness = LieViolation{"associativity", {(*assoc)[0], (*assoc)[1], (*assoc)[2]}};

    std::vector<Mat> ads = basis_adjoints(l);
    rep.invariant = true;
    for (size_t s = 0; s < n && rep.invariant; ++s) {
        const Mat& g = ads[s];
        for (size_t i = 0; i < n && rep.invariant; ++i)
            for (size_t j = 0; j < n && rep.invariant; ++j)
                for (size_t k = 0; k < n; ++k) {
                    Rat v = 0;
                    for (size_t m = 0; m < n; ++m)
                        v += g(k, m) * t.a(i, j, m) - g(m, i) * t.a(m, j, k) -
                             g(m, j) * t.a(i, m, k);
                    if (!is_zero(v)) {
                        rep.invariant = false;
                        if (!rep.first_witness)
                            rep.first_witness = LieViolation{"invariance", {s, i, j}};
                        break;
                    }
                }
    }
    return rep;
}

ProductTensor poisson_from_center(const LieAlgebra& l, const Vec& e0) {
    if (e0.size() != l.dim) throw structural_error("central element of wrong length");
    bool zero = true;
    for (const Rat& x : e0) zero = zero && is_zero(x);
    if (zero) throw rejection("central element must be nonzero");
    Mat ad_e0 = ad(l, e0);
    for (size_t j = 0; j < l.dim; ++j) {
        Vec col = ad_e0.col(j);
        for (size_t k = 0; k < l.dim; ++k)
            if (!is_zero(col[k])) throw rejection("element is not central", {j});
    }
    Mat k = killing(l);
    ProductTensor t(l.dim);
    for (size_t i = 0; i < l.dim; ++i)
        for (size_t j = 0; j < l.dim; ++j) {
            if (is_zero(k(i, j))) continue;
            for (size_t m = 0; m < l.dim; ++m) t.a(i, j, m) = k(i, j) * e0[m];
        }
    if (!verify_poisson(l, t).ok())
        throw structural_error("central construction failed the Poisson checks");
    return t;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    LieAlgebra s(a.dim + b.dim);
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) s.c(i, j, k) = a.c(i, j, k);
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t j = 0; j < b.dim; ++j)
            for (size_t k = 0; k < b.dim; ++k)
                s.c(a.dim + i, a.dim + j, a.dim + k) = b.c(i, j, k);
    for (size_t i = 0; i < a.dim; ++i)
        s.basis_names.push_back(a.name_of(i) + "'");
    for (size_t i = 0; i < b.dim; ++i) s.basis_names.push_back(b.name_of(i) + "\"");
    return s;
}

SymmetricPair double_pair(const LieAlgebra& g) {
    LieAlgebra d = direct_sum(g, g);
    Involution swap;
    swap.matrix = Mat(d.dim, d.dim);
    for (size_t i = 0; i < g.dim; ++i) {
        swap.matrix(i, g.dim + i) = 1;
        swap.matrix(g.dim + i, i) = 1;
    }
    return decompose(d, swap);
}

std::pair<SymmetricPair, ProductTensor> transport_to_double(const LieAlgebra& l,
                                                            const ProductTensor& t) {
    VerifyReport v = verify_poisson(l, t);
    if (!v.ok()) {
        std::string which = !v.commutative ? "commutativity"
                            : !v.associative ? "associativity"
                                             : "invariance";
        throw rejection("product is not a Poisson structure: " + which + " fails",
                        v.first_witness ? v.first_witness->indices : std::vector<size_t>{});
    }
    SymmetricPair dp = double_pair(l);
    // m-basis vectors are (e_i, -e_i), so m-coordinates match l-coordinates
    // and the tensor transports unchanged.
    ProductTensor out(l.dim);
    out.a = t.a;
    if (!verify_special(dp, out).ok())
        throw structural_error("transported product failed the special checks");
    return {std::move(dp), std::move(out)};
}

}  // namespace specon
