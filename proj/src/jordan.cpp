#include "specon/jordan.hpp"

#include "specon/kernels.hpp"

namespace specon {

Vec NonassocAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw structural_error("product arity mismatch");
    Vec z(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (is_zero(x[i])) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (is_zero(y[j])) continue;
            Rat f = x[i] * y[j];
            for (size_t k = 0; k < dim; ++k) z[k] += f * p(i, j, k);
        }
    }
    return z;
}

Mat left_mult(const NonassocAlgebra& a, const Vec& x) {
    if (x.size() != a.dim) throw structural_error("left_mult argument of wrong length");
    Mat m(a.dim, a.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        if (is_zero(x[i])) continue;
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) m(k, j) += x[i] * a.p(i, j, k);
    }
    return m;
}

Mat right_mult(const NonassocAlgebra& a, const Vec& x) {
    if (x.size() != a.dim) throw structural_error("right_mult argument of wrong length");
    Mat m(a.dim, a.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        if (is_zero(x[i])) continue;
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) m(k, j) += x[i] * a.p(j, i, k);
    }
    return m;
}

namespace {

Mat basis_left(const NonassocAlgebra& a, size_t i) {
    Vec e(a.dim);
    e[i] = 1;
    return left_mult(a, e);
}

Mat basis_right(const NonassocAlgebra& a, size_t i) {
    Vec e(a.dim);
    e[i] = 1;
    return right_mult(a, e);
}

}  // namespace

AlgebraFlags classify_algebra(const NonassocAlgebra& a) {
    AlgebraFlags f;
    size_t n = a.dim;

    f.commutative = true;
    for (size_t i = 0; i < n && f.commutative; ++i)
        for (size_t j = i + 1; j < n && f.commutative; ++j)
            for (size_t k = 0; k < n; ++k)
                if (a.p(i, j, k) != a.p(j, i, k)) {
                    f.commutative = false;
                    break;
                }

    f.associative = !kernels::associator_violation(a.p).has_value();

    // Triple products in both association orders.
    f.zero_associative = true;
    for (size_t i = 0; i < n && f.zero_associative; ++i)
        for (size_t j = 0; j < n && f.zero_associative; ++j) {
            Vec ij = a.multiply_basis(i, j);
            for (size_t l = 0; l < n; ++l) {
                Vec el(n);
                el[l] = 1;
                bool left_zero = true, right_zero = true;
                for (const Rat& x : a.multiply(ij, el)) left_zero = left_zero && is_zero(x);
                for (const Rat& x : a.multiply(el, ij)) right_zero = right_zero && is_zero(x);
                if (!left_zero || !right_zero) {
                    f.zero_associative = false;
                    break;
                }
            }
        }
    f.zero_associative = f.zero_associative && f.associative;

    // Fully linearized Jordan identity (char 0): for all basis triples,
    // [L_i, L_{jl}] + [L_j, L_{il}] + [L_l, L_{ij}] = 0.
    f.jordan = f.commutative;
    if (f.jordan) {
        std::vector<Mat> lefts;
        for (size_t i = 0; i < n; ++i) lefts.push_back(basis_left(a, i));
        for (size_t i = 0; i < n && f.jordan; ++i)
            for (size_t j = i; j < n && f.jordan; ++j)
                for (size_t l = j; l < n; ++l) {
                    Mat s = commutator(lefts[i], left_mult(a, a.multiply_basis(j, l))) +
                            commutator(lefts[j], left_mult(a, a.multiply_basis(i, l))) +
                            commutator(lefts[l], left_mult(a, a.multiply_basis(i, j)));
                    if (!s.is_zero()) {
                        f.jordan = false;
                        break;
                    }
                }
    }

    // Symmetric Leibniz operator identities.
    f.symmetric_leibniz = true;
    std::vector<Mat> ls, rs;
    for (size_t i = 0; i < n; ++i) {
        ls.push_back(basis_left(a, i));
        rs.push_back(basis_right(a, i));
    }
    for (size_t i = 0; i < n && f.symmetric_leibniz; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!(commutator(ls[i], ls[j]) == left_mult(a, a.multiply_basis(i, j))) ||
                !(commutator(rs[i], rs[j]) == right_mult(a, a.multiply_basis(j, i)))) {
                f.symmetric_leibniz = false;
                break;
            }
        }
    return f;
}

NonassocAlgebra symmetrize_leibniz(const NonassocAlgebra& a) {
    AlgebraFlags f = classify_algebra(a);
    if (!f.symmetric_leibniz) {
        // Find a witness pair for the rejection.
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) {
                if (!(commutator(basis_left(a, i), basis_left(a, j)) ==
                      left_mult(a, a.multiply_basis(i, j))) ||
                    !(commutator(basis_right(a, i), basis_right(a, j)) ==
                      right_mult(a, a.multiply_basis(j, i))))
                    throw rejection("algebra is not symmetric Leibniz", {i, j});
            }
        throw rejection("algebra is not symmetric Leibniz");
    }
    NonassocAlgebra s(a.dim);
    s.basis_names = a.basis_names;
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) s.p(i, j, k) = a.p(i, j, k) + a.p(j, i, k);
    AlgebraFlags sf = classify_algebra(s);
    if (!sf.commutative || !sf.zero_associative)
        throw structural_error("symmetrized product failed the 0-associativity check");
    return s;
}

size_t GradedLieAlgebra::grade_dim(int g) const {
    size_t n = 0;
    for (int x : grades) n += x == g;
    return n;
}

std::vector<size_t> GradedLieAlgebra::grade_indices(int g) const {
    std::vector<size_t> idx;
    for (size_t i = 0; i < grades.size(); ++i)
        if (grades[i] == g) idx.push_back(i);
    return idx;
}

Involution induced_involution(const GradedLieAlgebra& g) {
    Involution s;
    s.matrix = Mat(g.lie.dim, g.lie.dim);
    for (size_t i = 0; i < g.lie.dim; ++i) s.matrix(i, i) = g.grades[i] == 0 ? 1 : -1;
    return s;
}

namespace {

Vec vectorize(const Mat& m) { return m.a; }

Vec vectorize(const Tensor3& t) { return t.a; }

Mat to_mat(const Vec& v, size_t d) {
    Mat m(d, d);
    m.a = v;
    return m;
}

Tensor3 to_tensor(const Vec& v, size_t d) {
    Tensor3 t(d);
    t.a = v;
    return t;
}

// [L_x, L](y,z) = [L_x, L_y](z) - L_{x.y}(z) for x = e_i.
Tensor3 bracket_lx_l(const NonassocAlgebra& a, size_t i) {
    size_t d = a.dim;
    Tensor3 b(d);
    Mat li = basis_left(a, i);
    for (size_t j = 0; j < d; ++j) {
        Mat col = commutator(li, basis_left(a, j)) - left_mult(a, a.multiply_basis(i, j));
        for (size_t l = 0; l < d; ++l)
            for (size_t k = 0; k < d; ++k) b(j, l, k) = col(k, l);
    }
    return b;
}

// F applied to a symmetric tensor: (F.B)(y,z) = F(B(y,z)) - B(Fy,z) - B(y,Fz).
Tensor3 act_on_tensor(const Mat& f, const Tensor3& b) {
    size_t d = b.n0;
    Tensor3 out(d);
    for (size_t j = 0; j < d; ++j)
        for (size_t l = 0; l < d; ++l)
            for (size_t k = 0; k < d; ++k) {
                Rat s = 0;
                for (size_t m = 0; m < d; ++m)
                    s += f(k, m) * b(j, l, m) - f(m, j) * b(m, l, k) - f(m, l) * b(j, m, k);
                out(j, l, k) = s;
            }
    return out;
}

}  // namespace

GradedLieAlgebra tkk(const NonassocAlgebra& a) {
    AlgebraFlags flags = classify_algebra(a);
    if (!flags.jordan) throw rejection("tkk construction needs a Jordan algebra");
    size_t d = a.dim;

    std::vector<Mat> lefts;
    for (size_t i = 0; i < d; ++i) lefts.push_back(basis_left(a, i));

    // Grade 0: span{L_x, [L_y, L_z]} inside End(A).
    std::vector<Vec> g0span;
    for (size_t i = 0; i < d; ++i) g0span.push_back(vectorize(lefts[i]));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) g0span.push_back(vectorize(commutator(lefts[i], lefts[j])));
    Subspace g0 = Subspace::span(d * d, g0span);

    // Grade +1: span{L, [L_x, L]} inside Hom(S^2 A, A).
    std::vector<Vec> g1span;
    g1span.push_back(vectorize(a.p));
    for (size_t i = 0; i < d; ++i) g1span.push_back(vectorize(bracket_lx_l(a, i)));
    Subspace g1 = Subspace::span(d * d * d, g1span);
    for (const Vec& v : g1.basis()) {
        Tensor3 b = to_tensor(v, d);
        for (size_t j = 0; j < d; ++j)
            for (size_t l = j + 1; l < d; ++l)
                for (size_t k = 0; k < d; ++k)
                    if (b(j, l, k) != b(l, j, k))
                        throw structural_error("grade +1 element is not symmetric");
    }

    size_t q0 = g0.dim(), q1 = g1.dim();
    size_t n = d + q0 + q1;
    GradedLieAlgebra out;
    out.lie = LieAlgebra(n);
    out.grades.assign(d, -1);
    out.grades.insert(out.grades.end(), q0, 0);
    out.grades.insert(out.grades.end(), q1, 1);

    auto set_c = [&](size_t i, size_t j, const Vec& coords, size_t offset) {
        for (size_t k = 0; k < coords.size(); ++k) {
            out.lie.c(i, j, offset + k) = coords[k];
            out.lie.c(j, i, offset + k) = -coords[k];
        }
    };

    std::vector<Mat> f_mats;
    for (const Vec& v : g0.basis()) f_mats.push_back(to_mat(v, d));
    std::vector<Tensor3> b_tens;
    for (const Vec& v : g1.basis()) b_tens.push_back(to_tensor(v, d));

    // [F, x] = F(x).
    for (size_t s = 0; s < q0; ++s)
        for (size_t j = 0; j < d; ++j) {
            Vec e(d);
            e[j] = 1;
            set_c(d + s, j, f_mats[s] * e, 0);
        }
    // [F, F'] = operator commutator, landing back in grade 0.
    for (size_t s = 0; s < q0; ++s)
        for (size_t t = s + 1; t < q0; ++t) {
            Vec v = vectorize(commutator(f_mats[s], f_mats[t]));
            if (!g0.contains(v)) throw structural_error("grade 0 not closed under commutator");
            set_c(d + s, d + t, g0.coords(v), d);
        }
    // [F, B](x,y) = F(B(x,y)) - B(Fx,y) - B(x,Fy), landing in grade +1.
    for (size_t s = 0; s < q0; ++s)
        for (size_t t = 0; t < q1; ++t) {
            Vec v = vectorize(act_on_tensor(f_mats[s], b_tens[t]));
            if (!g1.contains(v)) throw structural_error("grade +1 not closed under the grade 0 action");
            set_c(d + s, d + q0 + t, g1.coords(v), d + q0);
        }
    // [B, x](y) = B(x, y), landing in grade 0.
    for (size_t t = 0; t < q1; ++t)
        for (size_t j = 0; j < d; ++j) {
            Mat op(d, d);
            for (size_t l = 0; l < d; ++l)
                for (size_t k = 0; k < d; ++k) op(k, l) = b_tens[t](j, l, k);
            Vec v = vectorize(op);
            if (!g0.contains(v)) throw structural_error("grade 0 does not absorb [B, x]");
            set_c(d + q0 + t, j, g0.coords(v), d);
        }

    LieValidation check = validate_lie(out.lie);
    if (!check.valid) {
        const LieViolation& w = check.violations.front();
        throw structural_error("tkk assembly failed " + w.identity + " at (" +
                               std::to_string(w.indices[0]) + "," + std::to_string(w.indices[1]) +
                               "," + std::to_string(w.indices[2]) + ")");
    }
    return out;
}

std::pair<SymmetricPair, ProductTensor> tkk_special_product(const NonassocAlgebra& a) {
    AlgebraFlags flags = classify_algebra(a);
    if (!flags.commutative || !flags.zero_associative)
        throw rejection("special product extraction needs a commutative 0-associative algebra");
    GradedLieAlgebra g = tkk(a);
    SymmetricPair pair = decompose(g.lie, induced_involution(g));
    size_t d = a.dim;
    size_t pm = pair.m_dim();
    // m collects the grade -1 block first (unit vectors in index order),
    // so the product sits on the leading d m-coordinates.
    for (size_t i = 0; i < d; ++i) {
        Vec expected(g.lie.dim);
        expected[i] = 1;
        if (!(pair.m.basis()[i] == expected))
            throw structural_error("unexpected m-coordinate layout in tkk pair");
    }
    ProductTensor t(pm);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) t.a(i, j, k) = a.p(i, j, k);
    if (!verify_special(pair, t).ok())
        throw structural_error("tkk special product failed verification");
    return {std::move(pair), std::move(t)};
}

}  // namespace specon
