#include "specon/symmetric_pair.hpp"

#include <algorithm>
#include <random>

#include "specon/poly.hpp"

namespace specon {

std::string certificate_name(Certificate c) {
    switch (c) {
        case Certificate::certified_irreducible: return "certified-irreducible";
        case Certificate::probable_irreducible: return "probable-irreducible";
        case Certificate::reducible_split: return "reducible-split";
    }
    return "?";
}

std::string confidence_name(Confidence c) {
    switch (c) {
        case Confidence::certified: return "certified";
        case Confidence::probabilistic: return "probabilistic";
        case Confidence::undetermined: return "undetermined";
    }
    return "?";
}

std::optional<LieViolation> involution_violation(const LieAlgebra& l, const Involution& s) {
    const Mat& t = s.matrix;
    if (t.rows != l.dim || t.cols != l.dim)
        throw structural_error("involution matrix of wrong shape");
    Mat sq = t * t;
    for (size_t j = 0; j < l.dim; ++j) {
        Vec col = sq.col(j);
        for (size_t i = 0; i < l.dim; ++i)
            if (col[i] != (i == j ? Rat(1) : Rat(0))) return LieViolation{"square", {j}};
    }
    for (size_t i = 0; i < l.dim; ++i)
        for (size_t j = i + 1; j < l.dim; ++j) {
            Vec lhs = t * l.bracket_basis(i, j);
            Vec rhs = l.bracket(t.col(i), t.col(j));
            if (lhs != rhs) return LieViolation{"automorphism", {i, j}};
        }
    return std::nullopt;
}

SymmetricPair decompose(const LieAlgebra& l, const Involution& s) {
    if (auto v = involution_violation(l, s)) {
        if (v->identity == "square")
            throw rejection("involution does not square to the identity", v->indices);
        throw rejection("involution is not an automorphism", v->indices);
    }
    Mat plus = s.matrix + Mat::identity(l.dim);
    Mat minus = s.matrix - Mat::identity(l.dim);
    SymmetricPair p{l, s, nullspace(plus), nullspace(minus)};
    if (p.m.dim() + p.h.dim() != l.dim)
        throw structural_error("eigenspace dimensions do not add up");
    if (!p.h.contains(bracket_subspaces(l, p.h, p.h)) ||
        !p.m.contains(bracket_subspaces(l, p.h, p.m)) ||
        !p.h.contains(bracket_subspaces(l, p.m, p.m)))
        throw structural_error("canonical decomposition inclusions violated");
    return p;
}

IsotropyData isotropy(const SymmetricPair& p) {
    IsotropyData data;
    const LieAlgebra& g = p.algebra;
    size_t q = p.h_dim(), pm = p.m_dim();
    data.rep.acting = subalgebra(g, p.h);
    data.rep.module_dim = pm;
    for (size_t s = 0; s < q; ++s) {
        Mat img(pm, pm);
        for (size_t j = 0; j < pm; ++j) {
            Vec w = g.bracket(p.h.basis()[s], p.m.basis()[j]);
            Vec c = p.m.coords(w);
            for (size_t k = 0; k < pm; ++k) img(k, j) = c[k];
        }
        data.rep.images.push_back(std::move(img));
    }
    if (homomorphism_violation(data.rep))
        throw structural_error("isotropy images violate the homomorphism law");

    // Kernel in h-coordinates, then in ambient coordinates.
    Mat sys(pm * pm, q);
    for (size_t s = 0; s < q; ++s)
        for (size_t r = 0; r < pm; ++r)
            for (size_t c = 0; c < pm; ++c) sys(r * pm + c, s) = data.rep.images[s](r, c);
    Subspace ker_h = nullspace(sys);
    std::vector<Vec> ker_ambient;
    for (const Vec& v : ker_h.basis()) ker_ambient.push_back(p.h.from_coords(v));
    data.kernel = Subspace::span(g.dim, ker_ambient);

    // Quotient h/kernel on the non-pivot coordinates of the kernel.
    std::vector<bool> is_piv(q, false);
    for (size_t piv : ker_h.pivots()) is_piv[piv] = true;
    std::vector<size_t> rest;
    for (size_t i = 0; i < q; ++i)
        if (!is_piv[i]) rest.push_back(i);
    auto project = [&](Vec v) {
        for (size_t i = 0; i < ker_h.dim(); ++i) {
            Rat f = v[ker_h.pivots()[i]];
            if (is_zero(f)) continue;
            for (size_t j = 0; j < q; ++j) v[j] -= f * ker_h.basis()[i][j];
        }
        Vec out(rest.size());
        for (size_t j = 0; j < rest.size(); ++j) out[j] = v[rest[j]];
        return out;
    };
    LieAlgebra quo(rest.size());
    for (size_t i = 0; i < rest.size(); ++i)
        for (size_t j = 0; j < rest.size(); ++j) {
            Vec br(q);
            for (size_t k = 0; k < q; ++k) br[k] = data.rep.acting.c(rest[i], rest[j], k);
            Vec pr = project(br);
            for (size_t k = 0; k < rest.size(); ++k) quo.c(i, j, k) = pr[k];
        }
    data.faithful_rep.acting = std::move(quo);
    data.faithful_rep.module_dim = pm;
    for (size_t j : rest) data.faithful_rep.images.push_back(data.rep.images[j]);
    if (homomorphism_violation(data.faithful_rep))
        throw structural_error("faithful quotient violates the homomorphism law");
    return data;
}

namespace {

// Basis of { X : X rho(a) = rho(a) X for all generators }.
std::vector<Mat> commutant_basis(const Representation& rep) {
    size_t p = rep.module_dim;
    size_t q = rep.images.size();
    Mat sys(q * p * p, p * p);
    for (size_t s = 0; s < q; ++s) {
        const Mat& g = rep.images[s];
        for (size_t r = 0; r < p; ++r)
            for (size_t c = 0; c < p; ++c) {
                size_t row = (s * p + r) * p + c;
                // (X g - g X)(r, c) = sum_t X(r,t) g(t,c) - g(r,t) X(t,c)
                for (size_t t = 0; t < p; ++t) {
                    sys(row, r * p + t) += g(t, c);
                    sys(row, t * p + c) -= g(r, t);
                }
            }
    }
    Subspace ker = nullspace(sys);
    std::vector<Mat> basis;
    for (const Vec& v : ker.basis()) {
        Mat x(p, p);
        for (size_t i = 0; i < p * p; ++i) x.a[i] = v[i];
        basis.push_back(std::move(x));
    }
    return basis;
}

bool subspace_invariant(const Representation& rep, const Subspace& u) {
    for (const Mat& g : rep.images)
        for (const Vec& b : u.basis())
            if (!u.contains(g * b)) return false;
    return true;
}

Representation restrict_to(const Representation& rep, const Subspace& u) {
    Representation r;
    r.acting = rep.acting;
    r.module_dim = u.dim();
    for (const Mat& g : rep.images) {
        Mat img(u.dim(), u.dim());
        for (size_t j = 0; j < u.dim(); ++j) {
            Vec c = u.coords(g * u.basis()[j]);
            for (size_t k = 0; k < u.dim(); ++k) img(k, j) = c[k];
        }
        r.images.push_back(std::move(img));
    }
    return r;
}

Subspace lift(const Subspace& inner, const Subspace& u) {
    std::vector<Vec> vecs;
    for (const Vec& v : inner.basis()) vecs.push_back(u.from_coords(v));
    return Subspace::span(u.ambient_dim(), vecs);
}

}  // namespace

std::optional<Subspace> invariant_complement(const Representation& rep, const Subspace& u) {
    size_t p = rep.module_dim;
    size_t ud = u.dim();
    if (ud == 0 || ud == p) throw structural_error("complement of a trivial submodule");
    std::vector<bool> is_piv(p, false);
    for (size_t piv : u.pivots()) is_piv[piv] = true;
    std::vector<size_t> rest;
    for (size_t i = 0; i < p; ++i)
        if (!is_piv[i]) rest.push_back(i);
    size_t vd = rest.size();
    auto pi = [&](Vec v) {  // quotient coordinates
        for (size_t i = 0; i < ud; ++i) {
            Rat f = v[u.pivots()[i]];
            if (is_zero(f)) continue;
            for (size_t j = 0; j < p; ++j) v[j] -= f * u.basis()[i][j];
        }
        Vec out(vd);
        for (size_t j = 0; j < vd; ++j) out[j] = v[rest[j]];
        return out;
    };
    auto u_part = [&](Vec v) {  // U-coordinates of v - s0(pi(v))
        Vec coords(ud);
        for (size_t i = 0; i < ud; ++i) coords[i] = v[u.pivots()[i]];
        return coords;
    };
    auto s0 = [&](const Vec& quotient) {
        Vec v(p);
        for (size_t j = 0; j < vd; ++j) v[rest[j]] = quotient[j];
        return v;
    };
    size_t q = rep.images.size();
    // Unknowns phi(k, j), k < ud, j < vd: section s(e_j) = s0(e_j) + phi(:,j).
    Mat sys(q * ud * vd, ud * vd + 1);
    for (size_t s = 0; s < q; ++s) {
        const Mat& g = rep.images[s];
        // Restriction of g to U and induced quotient map.
        Mat gu(ud, ud);
        for (size_t j = 0; j < ud; ++j) {
            Vec c = u.coords(g * u.basis()[j]);
            for (size_t k = 0; k < ud; ++k) gu(k, j) = c[k];
        }
        for (size_t j = 0; j < vd; ++j) {
            Vec e(vd);
            e[j] = 1;
            Vec gs0 = g * s0(e);
            Vec gbar = pi(gs0);  // quotient action on e_j
            Vec c0 = u_part(gs0);
            // Row block: c0 + gu * phi(:,j) - sum_l gbar[l] phi(:,l) = 0.
            for (size_t k = 0; k < ud; ++k) {
                size_t row = (s * vd + j) * ud + k;
                sys(row, ud * vd) = c0[k];
                for (size_t t = 0; t < ud; ++t) sys(row, t * vd + j) += gu(k, t);
                for (size_t l = 0; l < vd; ++l) sys(row, k * vd + l) -= gbar[l];
            }
        }
    }
    // Solve sys * (phi, 1)^T = 0: consistency of the affine system.
    RrefResult rr = rref(sys);
    for (size_t piv : rr.pivots)
        if (piv == ud * vd) return std::nullopt;  // inconsistent: no complement
    Vec phi(ud * vd);
    for (size_t i = 0; i < rr.rank; ++i) phi[rr.pivots[i]] = -rr.r(i, ud * vd);
    std::vector<Vec> basis;
    for (size_t j = 0; j < vd; ++j) {
        Vec e(vd);
        e[j] = 1;
        Vec v = s0(e);
        for (size_t k = 0; k < ud; ++k) {
            if (is_zero(phi[k * vd + j])) continue;
            for (size_t i = 0; i < p; ++i) v[i] += phi[k * vd + j] * u.basis()[k][i];
        }
        basis.push_back(std::move(v));
    }
    Subspace comp = Subspace::span(p, basis);
    if (comp.dim() != vd || !subspace_invariant(rep, comp))
        throw structural_error("invariant complement reconstruction failed");
    return comp;
}

namespace {

struct SplitCtx {
    std::mt19937_64 rng;
    explicit SplitCtx(uint64_t seed) : rng(seed) {}
};

void split_rec(SplitCtx& ctx, const Representation& rep, SplitResult& out,
               const Subspace& embedding);

// Splits along an invariant subspace (plus complement) if possible; returns
// false when u has no invariant complement (leaf is then reducible_split).
bool split_along(SplitCtx& ctx, const Representation& rep, const Subspace& u, SplitResult& out,
                 const Subspace& embedding) {
    std::optional<Subspace> comp = invariant_complement(rep, u);
    if (!comp) return false;
    split_rec(ctx, restrict_to(rep, u), out, lift(u, embedding));
    split_rec(ctx, restrict_to(rep, *comp), out, lift(*comp, embedding));
    return true;
}

void split_rec(SplitCtx& ctx, const Representation& rep, SplitResult& out,
               const Subspace& embedding) {
    size_t p = rep.module_dim;
    if (p == 0) return;
    std::vector<Mat> comm = commutant_basis(rep);

    // Exact commutant eigenspace splitting.
    for (const Mat& c : comm) {
        std::vector<Rat> roots = rational_roots(char_poly(c));
        std::vector<Subspace> eigen;
        size_t total = 0;
        for (const Rat& lam : roots) {
            Mat shifted = c;
            for (size_t i = 0; i < p; ++i) shifted(i, i) -= lam;
            Subspace e = nullspace(shifted);
            if (e.dim() == 0) continue;
            total += e.dim();
            eigen.push_back(std::move(e));
        }
        if (eigen.size() >= 2 && total == p) {
            for (const Subspace& e : eigen)
                split_rec(ctx, restrict_to(rep, e), out, lift(e, embedding));
            return;
        }
        if (!eigen.empty() && total < p) {
            Subspace u = eigen[0];
            for (size_t i = 1; i < eigen.size(); ++i) u = u.sum(eigen[i]);
            if (u.dim() > 0 && u.dim() < p) {
                if (split_along(ctx, rep, u, out, embedding)) return;
                out.summands.push_back(embedding);
                out.certificates.push_back(Certificate::reducible_split);
                return;
            }
        }
    }

    // Certification tiers on an unsplit leaf.
    if (comm.size() == 1) {
        out.summands.push_back(embedding);
        out.certificates.push_back(Certificate::certified_irreducible);
        return;
    }
    if (comm.size() == 2) {
        // det(a c1 + b c2) definite <=> det(c1) != 0 and no real roots.
        UPoly f = det_pencil(comm[0], comm[1]);
        if (det(comm[0]) != 0 && count_real_roots(f) == 0) {
            out.summands.push_back(embedding);
            out.certificates.push_back(Certificate::certified_irreducible);
            return;
        }
    }

    // Seeded randomized search for invariant subspaces missed above.
    std::uniform_int_distribution<int> small(-3, 3);
    size_t q = rep.images.size();
    for (int trial = 0; trial < 64; ++trial) {
        Mat x(p, p);
        if (trial % 2 == 0 || q == 0) {
            for (const Mat& c : comm) x = x + Rat(small(ctx.rng)) * c;
        } else {
            Mat a(p, p), b(p, p);
            for (size_t s = 0; s < q; ++s) {
                a = a + Rat(small(ctx.rng)) * rep.images[s];
                b = b + Rat(small(ctx.rng)) * rep.images[s];
            }
            x = a * b + Rat(small(ctx.rng)) * a;
        }
        if (x.is_zero()) continue;
        for (const Rat& lam : rational_roots(char_poly(x))) {
            Mat shifted = x;
            for (size_t i = 0; i < p; ++i) shifted(i, i) -= lam;
            Subspace u = nullspace(shifted);
            if (u.dim() == 0 || u.dim() == p || !subspace_invariant(rep, u)) continue;
            if (split_along(ctx, rep, u, out, embedding)) return;
            out.summands.push_back(embedding);
            out.certificates.push_back(Certificate::reducible_split);
            return;
        }
    }
    out.summands.push_back(embedding);
    out.certificates.push_back(Certificate::probable_irreducible);
}

}  // namespace

SplitResult split_module(const Representation& rep, uint64_t seed) {
    if (homomorphism_violation(rep))
        throw structural_error("split_module input violates the homomorphism law");
    SplitResult out;
    out.seed = seed;
    SplitCtx ctx(seed);
    split_rec(ctx, rep, out, Subspace::full(rep.module_dim));
    // Deterministic report order; keep certificates paired with summands.
    std::vector<size_t> idx(out.summands.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (!(out.summands[a] == out.summands[b]))
            return Subspace::order(out.summands[a], out.summands[b]);
        return a < b;
    });
    SplitResult sorted;
    sorted.seed = seed;
    for (size_t i : idx) {
        sorted.summands.push_back(out.summands[i]);
        sorted.certificates.push_back(out.certificates[i]);
    }
    return sorted;
}

Classification classify(const SymmetricPair& p, bool compact_h_assertion, uint64_t seed) {
    Classification cls;
    cls.seed = seed;
    IsotropyData iso = isotropy(p);
    SplitResult split = split_module(iso.rep, seed);
    for (const Subspace& s : split.summands) {
        std::vector<Vec> amb;
        for (const Vec& v : s.basis()) amb.push_back(p.m_vector(v));
        cls.decomposition.push_back(Subspace::span(p.algebra.dim, amb));
    }
    cls.certificates = split.certificates;

    bool all_irreducible = true, any_probable = false;
    for (Certificate c : split.certificates) {
        if (c == Certificate::reducible_split) all_irreducible = false;
        if (c == Certificate::probable_irreducible) any_probable = true;
    }
    cls.semisimple = all_irreducible;
    cls.simple = split.summands.size() == 1 &&
                 split.certificates[0] == Certificate::certified_irreducible && p.m_dim() >= 1;
    for (size_t i = 0; i < cls.decomposition.size(); ++i)
        if (bracket_subspaces(p.algebra, cls.decomposition[i], cls.decomposition[i]).is_zero())
            cls.zero_bracket_summands.push_back(i);
    cls.strongly_semisimple = cls.semisimple && cls.zero_bracket_summands.empty();
    cls.confidence = any_probable ? Confidence::probabilistic : Confidence::certified;
    if (compact_h_assertion && is_semisimple(p.algebra)) {
        cls.semisimple = true;
        cls.strongly_semisimple = true;
        cls.confidence = Confidence::certified;
    }
    return cls;
}

bool is_cartan_involution(const LieAlgebra& l, const Involution& t) {
    if (auto v = involution_violation(l, t))
        throw rejection("not an involutive automorphism (" + v->identity + ")", v->indices);
    Mat form = Rat(-1) * (killing(l) * t.matrix);
    if (!form.is_symmetric()) throw structural_error("Cartan form is not symmetric");
    return is_positive_definite(form);
}

}  // namespace specon
