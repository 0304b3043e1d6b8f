#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "specon/poly.hpp"

using namespace specon;
using namespace specon::testing;

TEST_CASE("univariate roots by divisor enumeration") {
    // 2x^3 + x^2 - 3x = x(x-1)(2x+3)
    UPoly p{Rat(0), Rat(-3), Rat(1), Rat(2)};
    std::vector<Rat> roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rat(-3, 2));
    CHECK(roots[1] == 0);
    CHECK(roots[2] == 1);
    CHECK(rational_roots(UPoly{Rat(-2), Rat(0), Rat(1)}).empty());  // x^2 - 2
    CHECK(rational_roots(UPoly{Rat(5)}).empty());
}

TEST_CASE("real-root counting by Sturm chains") {
    CHECK(count_real_roots(UPoly{Rat(1), Rat(0), Rat(1)}) == 0);   // x^2 + 1
    CHECK(count_real_roots(UPoly{Rat(-2), Rat(0), Rat(1)}) == 2);  // x^2 - 2
    // (x^2 - 2)(x^2 + 1) distinct real roots: 2
    UPoly p = umul(UPoly{Rat(-2), Rat(0), Rat(1)}, UPoly{Rat(1), Rat(0), Rat(1)});
    CHECK(count_real_roots(p) == 2);
    // (x-1)^2: one distinct real root, squarefree handling
    CHECK(count_real_roots(UPoly{Rat(1), Rat(-2), Rat(1)}) == 1);
    CHECK(count_real_roots(UPoly{Rat(0), Rat(1)}) == 1);
}

TEST_CASE("characteristic polynomial, exact") {
    Mat m = Mat::from_rows({{Rat(2), Rat(1)}, {Rat(0), Rat(3)}});
    CHECK(char_poly(m) == UPoly{Rat(6), Rat(-5), Rat(1)});
    std::mt19937_64 rng(5);
    for (int t = 0; t < 8; ++t) {
        Mat a = rand_mat(rng, 4, 4);
        UPoly cp = char_poly(a);
        // det(xI - A) at x = 7 must match an independent determinant.
        Mat shifted = Rat(7) * Mat::identity(4) - a;
        CHECK(ueval(cp, Rat(7)) == laplace_det(shifted));
    }
}

TEST_CASE("pencil determinant by interpolation") {
    std::mt19937_64 rng(9);
    Mat x = rand_mat(rng, 3, 3), y = rand_mat(rng, 3, 3);
    UPoly p = det_pencil(x, y);
    for (long t : {-2L, 0L, 5L}) {
        Mat m = Rat(t) * x + y;
        CHECK(ueval(p, Rat(t)) == laplace_det(m));
    }
}

TEST_CASE("multivariate arithmetic and rendering") {
    MPoly x = MPoly::var(3, 0), y = MPoly::var(3, 1);
    MPoly p = x * x - y * Rat(2) + MPoly::constant(3, Rat(1));
    CHECK(p.str() == "w0^2 - 2*w1 + 1");
    CHECK(p.eval({Rat(3), Rat(1), Rat(0)}) == 8);
    CHECK(p.substitute(0, y).eval({Rat(0), Rat(2), Rat(0)}) == 1);
    MPoly q = (p * Rat(1, 2)).normalized();
    CHECK(q == p.normalized());
}

TEST_CASE("solver: empty real variety is complete") {
    MPoly w0 = MPoly::var(1, 0);
    PolySolveResult r = solve_poly_system(1, {w0 * w0 + MPoly::constant(1, Rat(1))});
    CHECK(r.complete);
    CHECK(r.components.empty());
}

TEST_CASE("solver: irrational roots surface as residual") {
    MPoly w0 = MPoly::var(1, 0);
    PolySolveResult r = solve_poly_system(1, {w0 * w0 - MPoly::constant(1, Rat(2))});
    CHECK(!r.complete);
    CHECK(!r.residual.empty());
    CHECK(r.components.empty());
}

TEST_CASE("solver: linear system pins a point") {
    MPoly w0 = MPoly::var(2, 0), w1 = MPoly::var(2, 1);
    PolySolveResult r =
        solve_poly_system(2, {w0 + w1 - MPoly::constant(2, Rat(1)), w0 - w1});
    CHECK(r.complete);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].point == Vec{Rat(1, 2), Rat(1, 2)});
    CHECK(r.components[0].directions.empty());
}

TEST_CASE("solver: union of monomial branches gives the three lines") {
    MPoly w0 = MPoly::var(3, 0), w1 = MPoly::var(3, 1), w2 = MPoly::var(3, 2);
    std::vector<MPoly> sys{w0 * w1, w1 * (w2 - w1), w0 * (w1 - w2)};
    PolySolveResult r = solve_poly_system(3, sys);
    CHECK(r.complete);
    REQUIRE(r.components.size() == 3);
    for (const AffineComponent& c : r.components) {
        CHECK(c.point == Vec(3));
        CHECK(c.directions.size() == 1);
    }
    CHECK(r.components[0].directions[0] == Vec{Rat(0), Rat(0), Rat(1)});
    CHECK(r.components[1].directions[0] == Vec{Rat(0), Rat(1), Rat(1)});
    CHECK(r.components[2].directions[0] == Vec{Rat(1), Rat(0), Rat(0)});
}

TEST_CASE("solver: splits a factorable quadratic") {
    MPoly w0 = MPoly::var(2, 0), w1 = MPoly::var(2, 1);
    PolySolveResult r = solve_poly_system(2, {w0 * w0 - w1 * w1});
    CHECK(r.complete);
    REQUIRE(r.components.size() == 2);
    CHECK(r.components[0].directions[0] == Vec{Rat(1), Rat(-1)});
    CHECK(r.components[1].directions[0] == Vec{Rat(1), Rat(1)});
}

TEST_CASE("solver: curved parametrization reported, sample points exact") {
    MPoly w0 = MPoly::var(2, 0), w1 = MPoly::var(2, 1);
    PolySolveResult r = solve_poly_system(2, {w1 - w0 * w0});
    CHECK(r.complete);
    CHECK(!r.notes.empty());
    REQUIRE(!r.components.empty());
    for (const AffineComponent& c : r.components) {
        CHECK(c.directions.empty());
        Rat sq = c.point[0] * c.point[0];
        CHECK(c.point[1] == sq);
    }
}

TEST_CASE("solver: every emitted point satisfies the system") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        size_t n = 2 + t % 2;
        std::vector<MPoly> sys;
        for (int s = 0; s < 2; ++s) {
            MPoly p(n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j) {
                    MPoly::Expo e(n, 0);
                    ++e[i];
                    ++e[j];
                    if (t % 3) p.add_term(e, Rat((int)((rng() % 5)) - 2));
                }
            for (size_t i = 0; i < n; ++i) {
                MPoly::Expo e(n, 0);
                e[i] = 1;
                p.add_term(e, Rat((int)((rng() % 5)) - 2));
            }
            if (!p.is_zero()) sys.push_back(p);
        }
        PolySolveResult r = solve_poly_system(n, sys);
        for (const AffineComponent& c : r.components) {
            for (const MPoly& p : sys) CHECK(p.eval(c.point) == 0);
            for (const Vec& d : c.directions) {
                Vec pt = c.point;
                for (size_t i = 0; i < n; ++i) pt[i] += Rat(3) * d[i];
                for (const MPoly& p : sys) CHECK(p.eval(pt) == 0);
            }
        }
    }
}
