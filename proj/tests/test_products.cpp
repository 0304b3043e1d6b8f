#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "specon/catalog.hpp"

using namespace specon;
using namespace specon::testing;

namespace {

// The Example product on r4-so3: e_i * e_j = delta_ij e_4 for i,j <= 3.
ProductTensor example39_product() {
    ProductTensor t(4);
    for (size_t i = 0; i < 3; ++i) t.a(i, i, 3) = 1;
    return t;
}

// One-line pair: abelian algebra with sigma = -Id, so m is everything and
// h is trivial.
SymmetricPair line_pair() {
    LieAlgebra l(1);
    Involution s{Mat(1, 1)};
    s.matrix(0, 0) = -1;
    return decompose(l, s);
}

ProductTensor from_w(const std::vector<ProductTensor>& basis, const Vec& w) {
    ProductTensor t(basis[0].dim);
    for (size_t m = 0; m < basis.size(); ++m)
        for (size_t i = 0; i < t.a.a.size(); ++i) t.a.a[i] += w[m] * basis[m].a.a[i];
    return t;
}

}  // namespace

TEST_CASE("candidate space dimensions") {
    CHECK(candidate_space(sphere_pair(2)).empty());
    CHECK(candidate_space(sphere_pair(3)).empty());
    CHECK(candidate_space(r4_so3_pair()).size() == 3);
    CHECK(candidate_space(line_pair()).size() == 1);
}

TEST_CASE("candidate space of r4-so3 leads with the example product") {
    std::vector<ProductTensor> w = candidate_space(r4_so3_pair());
    REQUIRE(w.size() == 3);
    CHECK(w[0] == example39_product());
    // Every basis element is commutative and invariant by construction.
    SymmetricPair p = r4_so3_pair();
    for (const ProductTensor& t : w) {
        VerifyReport v = verify_special(p, t);
        CHECK(v.commutative);
        CHECK(v.invariant);
    }
}

TEST_CASE("sphere pairs admit only the trivial special product") {
    for (size_t n : {2u, 3u}) {
        SolutionSet s = solve_special(sphere_pair(n));
        CHECK(s.status == SolveStatus::complete);
        REQUIRE(s.solutions.size() == 1);
        CHECK(s.solutions[0].is_zero());
    }
}

TEST_CASE("solve on r4-so3 finds the example product among three lines") {
    SolutionSet s = solve_special(r4_so3_pair());
    CHECK(s.status == SolveStatus::complete);
    CHECK(s.components.size() == 3);
    bool found = false;
    for (const ProductTensor& t : s.solutions) found = found || t == example39_product();
    CHECK(found);
    // Every nonzero solution representative really is special.
    SymmetricPair p = r4_so3_pair();
    for (const ProductTensor& t : s.solutions) CHECK(verify_special(p, t).ok());
}

TEST_CASE("a line with trivial h carries a full line of products") {
    SolutionSet s = solve_special(line_pair());
    CHECK(s.status == SolveStatus::complete_linear_subvariety);
    CHECK(s.candidate_basis.size() == 1);
}

TEST_CASE("verify_special fixtures") {
    SymmetricPair p = r4_so3_pair();
    CHECK(verify_special(p, ProductTensor(4)).ok());
    CHECK(verify_special(p, example39_product()).ok());

    ProductTensor bad = example39_product();
    bad.a(3, 3, 0) = 1;  // e4 * e4 = e1 breaks invariance (and associativity)
    VerifyReport v = verify_special(p, bad);
    CHECK(!v.ok());
    CHECK(!v.invariant);
    CHECK(v.commutative);
    REQUIRE(v.first_witness.has_value());

    ProductTensor inv_only(4);
    inv_only.a(0, 0, 0) = 1;  // e1 * e1 = e1 is associative but not invariant
    VerifyReport v2 = verify_special(p, inv_only);
    CHECK(v2.commutative);
    CHECK(v2.associative);
    CHECK(!v2.invariant);
    REQUIRE(v2.first_witness.has_value());
    CHECK(v2.first_witness->identity == "invariance");
}

TEST_CASE("torsion formula and antisymmetry") {
    ProductTensor sym(3);
    sym.a(0, 1, 2) = 5;
    sym.a(1, 0, 2) = 5;
    CHECK(torsion(sym).is_zero());

    ProductTensor t(3);
    t.a(1, 2, 1) = 1;
    Tensor3 tor = torsion(t);
    CHECK(tor(1, 2, 1) == 1);
    CHECK(tor(2, 1, 1) == -1);

    std::mt19937_64 rng(61);
    ProductTensor r(3);
    for (Rat& x : r.a.a) x = rand_rat(rng);
    Tensor3 tr = torsion(r);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            for (size_t k = 0; k < 3; ++k) CHECK(tr(i, j, k) == -tr(j, i, k));
}

TEST_CASE("curvature of the canonical connection") {
    // [m,m] = 0 on r4-so3, so R^0 = 0.
    CHECK(curvature(r4_so3_pair(), ProductTensor(4)).r.is_zero());

    // Sphere pair: R(u1,u2)u_l = -[[u1,u2],u_l], spot-checked directly.
    SymmetricPair p = sphere_pair(2);
    CurvatureTensor r = curvature(p, ProductTensor(2));
    CHECK(!r.r.is_zero());
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t l = 0; l < 2; ++l) {
                Vec hv = p.algebra.bracket(p.m.basis()[i], p.m.basis()[j]);
                Vec w = p.algebra.bracket(hv, p.m.basis()[l]);
                Vec c = p.m.coords(w);
                for (size_t k = 0; k < 2; ++k) CHECK(r.r(i, j, l, k) == -c[k]);
            }

    // The example product has the canonical curvature (zero here).
    CHECK(curvature(r4_so3_pair(), example39_product()).r.is_zero());
}

TEST_CASE("semi-symmetry holds for canonical curvatures and fails generically") {
    CHECK(semi_symmetry_check(CurvatureTensor{4, Tensor4(4)}).ok);
    CHECK(semi_symmetry_check(curvature(sphere_pair(2), ProductTensor(2))).ok);
    CHECK(semi_symmetry_check(curvature(sphere_pair(3), ProductTensor(3))).ok);

    std::mt19937_64 rng(67);
    Tensor4 r(3);
    for (Rat& x : r.a) x = rand_rat(rng, 3, 1);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j <= i; ++j)
            for (size_t l = 0; l < 3; ++l)
                for (size_t k = 0; k < 3; ++k) r(i, j, l, k) = i == j ? Rat(0) : -r(j, i, l, k);
    SemiSymmetryReport rep = semi_symmetry_check(CurvatureTensor{3, r});
    CHECK(!rep.ok);
    CHECK(rep.witness.has_value());
}

TEST_CASE("holonomy of the canonical connection is the isotropy image of [m,m]") {
    SymmetricPair p = sphere_pair(2);
    HolonomyAlgebra hol = holonomy(p, ProductTensor(2));
    CHECK(hol.generators.dim() == 1);
    CHECK(hol.closed);

    HolonomyAlgebra trivial = holonomy(r4_so3_pair(), example39_product());
    CHECK(trivial.generators.is_zero());
    CHECK(trivial.closed);
}

TEST_CASE("holonomy rejects non-special products") {
    ProductTensor bad(4);
    bad.a(0, 1, 2) = 1;  // not commutative
    CHECK_THROWS_AS(holonomy(r4_so3_pair(), bad), rejection);
}

TEST_CASE("poisson product on gl(2) from the identity matrix") {
    LieAlgebra gl2 = gl_algebra(2);
    // e0 = identity = E11 + E22 in the elementary basis.
    Vec e0{Rat(1), Rat(0), Rat(0), Rat(1)};
    ProductTensor t = poisson_from_center(gl2, e0);
    CHECK(!t.is_zero());
    CHECK(verify_poisson(gl2, t).ok());
    // kappa(u, v) = 4 tr(uv) - 2 tr(u) tr(v) on gl(2): check on the basis.
    Mat k = killing(gl2);
    std::vector<Mat> mats;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Mat e(2, 2);
            e(i, j) = 1;
            mats.push_back(e);
        }
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b) {
            Rat expect = 4 * trace(mats[a] * mats[b]) - 2 * trace(mats[a]) * trace(mats[b]);
            CHECK(k(a, b) == expect);
            for (size_t m = 0; m < 4; ++m) CHECK(t.a(a, b, m) == expect * e0[m]);
        }
}

TEST_CASE("poisson construction rejections and degenerate cases") {
    CHECK_THROWS_AS(poisson_from_center(sl2_hef(), Vec{Rat(1), Rat(0), Rat(0)}), rejection);
    CHECK_THROWS_AS(poisson_from_center(gl_algebra(2), Vec(4)), rejection);
    ProductTensor z = poisson_from_center(abelian(2), Vec{Rat(1), Rat(0)});
    CHECK(z.is_zero());
}

TEST_CASE("transport of the gl(2) poisson product to the double pair") {
    LieAlgebra gl2 = gl_algebra(2);
    ProductTensor t = poisson_from_center(gl2, Vec{Rat(1), Rat(0), Rat(0), Rat(1)});
    auto [pair, prod] = transport_to_double(gl2, t);
    CHECK(pair.m_dim() == 4);
    CHECK(!prod.is_zero());
    CHECK(verify_special(pair, prod).ok());

    auto [zpair, zprod] = transport_to_double(sl2_hef(), ProductTensor(3));
    CHECK(zprod.is_zero());
    CHECK(verify_special(zpair, zprod).ok());

    ProductTensor bad(3);
    bad.a(0, 0, 0) = 1;  // not invariant on sl2
    CHECK_THROWS_AS(transport_to_double(sl2_hef(), bad), rejection);
}

TEST_CASE("theorem equivalence: special iff torsion-free with canonical curvature") {
    SymmetricPair p = r4_so3_pair();
    std::vector<ProductTensor> w = candidate_space(p);
    CurvatureTensor r0 = curvature(p, ProductTensor(4));
    std::mt19937_64 rng(71);
    for (int t = 0; t < 60; ++t) {
        Vec coords = rand_vec(rng, w.size());
        ProductTensor a = from_w(w, coords);
        bool special = verify_special(p, a).ok();
        bool flat = torsion(a).is_zero() && curvature(p, a).r == r0.r;
        CHECK(special == flat);
    }
}

TEST_CASE("trace lemma: tr(alpha_{[a,v]}) = 0 on the candidate space") {
    for (const SymmetricPair& p : {r4_so3_pair(), double_pair(gl_algebra(2))}) {
        IsotropyData iso = isotropy(p);
        for (const ProductTensor& t : candidate_space(p))
            for (const Mat& g : iso.rep.images)
                for (size_t v = 0; v < p.m_dim(); ++v) {
                    Vec ev(p.m_dim());
                    ev[v] = 1;
                    CHECK(trace(left_operator(t, g * ev)) == 0);
                }
    }
}

TEST_CASE("power identity: alpha_u^n = alpha_{u^n} for special products") {
    SymmetricPair p = r4_so3_pair();
    ProductTensor t = example39_product();
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        Vec u = rand_vec(rng, 4);
        Mat op = left_operator(t, u);
        Mat power = op;
        Vec ustar = u;  // u^1
        for (size_t n = 2; n <= 4; ++n) {
            power = power * op;
            // u^n = u * u^{n-1}
            Vec next(4);
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 4; ++j)
                    for (size_t k = 0; k < 4; ++k) next[k] += u[i] * ustar[j] * t.a(i, j, k);
            ustar = next;
            CHECK(power == left_operator(t, ustar));
        }
    }
}

TEST_CASE("the gl(2) double pair: candidate space and solution variety") {
    LieAlgebra gl2 = gl_algebra(2);
    SymmetricPair p = double_pair(gl2);
    std::vector<ProductTensor> w = candidate_space(p);
    // Invariant commutative products on gl(2): k(u,v)e0, the symmetrized
    // trace pairing u tr(v) + v tr(u), and tr(u)tr(v)e0 span a 3-space.
    CHECK(w.size() == 3);

    // The Poisson tensor lies on a solution component of the variety.
    ProductTensor poisson = poisson_from_center(gl2, Vec{Rat(1), Rat(0), Rat(0), Rat(1)});
    // Its W-coordinates: solve the stacked linear system basis * x = poisson.
    size_t cells = poisson.a.a.size();
    Mat sys(cells, w.size() + 1);
    for (size_t m = 0; m < w.size(); ++m)
        for (size_t i = 0; i < cells; ++i) sys(i, m) = w[m].a.a[i];
    for (size_t i = 0; i < cells; ++i) sys(i, w.size()) = poisson.a.a[i];
    RrefResult rr = rref(sys);
    for (size_t piv : rr.pivots) REQUIRE(piv < w.size());  // consistent
    Vec coords(w.size());
    for (size_t i = 0; i < rr.rank; ++i) coords[rr.pivots[i]] = rr.r(i, w.size());

    SolutionSet sol = solve_special(p);
    for (const MPoly& q : sol.quadratic_constraints) CHECK(q.eval(coords) == 0);
    bool on_component = false;
    for (const AffineComponent& comp : sol.components) {
        Vec diff = coords;
        for (size_t i = 0; i < diff.size(); ++i) diff[i] -= comp.point[i];
        on_component =
            on_component || Subspace::span(w.size(), comp.directions).contains(diff);
    }
    CHECK(on_component);
    // Whatever the solver enumerates must verify.
    for (const ProductTensor& t : sol.solutions) CHECK(verify_special(p, t).ok());
}

TEST_CASE("semi-symmetry for verified special products across fixtures") {
    SymmetricPair p = r4_so3_pair();
    CHECK(semi_symmetry_check(curvature(p, example39_product())).ok);
    LieAlgebra gl2 = gl_algebra(2);
    auto [dp, prod] = transport_to_double(gl2, poisson_from_center(gl2, Vec{Rat(1), Rat(0), Rat(0), Rat(1)}));
    CHECK(semi_symmetry_check(curvature(dp, prod)).ok);
}
