#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace specon;
using namespace specon::testing;

TEST_CASE("validate_lie accepts the catalog-style fixtures") {
    CHECK(validate_lie(abelian(4)).valid);
    CHECK(validate_lie(so3_cyclic()).valid);
    CHECK(validate_lie(sl2_hef()).valid);
    CHECK(validate_lie(heisenberg3()).valid);
}

TEST_CASE("validate_lie reports a perturbed so(3) with a named triple") {
    LieAlgebra l = so3_cyclic();
    l.c(0, 1, 2) += 1;  // breaks antisymmetry against c(1,0,2)
    LieValidation v = validate_lie(l);
    CHECK(!v.valid);
    REQUIRE(!v.violations.empty());
    CHECK(v.violations[0].identity == "antisymmetry");
}

TEST_CASE("every single-entry mutation of a non-abelian fixture is caught") {
    std::mt19937_64 rng(101);
    for (const LieAlgebra& base : {so3_cyclic(), sl2_hef(), heisenberg3()}) {
        for (int t = 0; t < 50; ++t) {
            LieAlgebra l = base;
            size_t i = rng() % l.dim, j = rng() % l.dim, k = rng() % l.dim;
            l.c(i, j, k) += 1;
            LieValidation v = validate_lie(l);
            CHECK(!v.valid);
            CHECK(!v.violations.empty());
        }
    }
}

TEST_CASE("ad on the abelian algebra vanishes") {
    LieAlgebra l = abelian(3);
    CHECK(ad(l, Vec{Rat(1), Rat(2), Rat(3)}).is_zero());
}

TEST_CASE("ad table on so(3)") {
    LieAlgebra l = so3_cyclic();
    Vec e1{Rat(1), Rat(0), Rat(0)};
    Mat a = ad(l, e1);
    // ad(e1) e2 = e3, ad(e1) e3 = -e2
    CHECK(a.col(1) == Vec{Rat(0), Rat(0), Rat(1)});
    CHECK(a.col(2) == Vec{Rat(0), Rat(-1), Rat(0)});
}

TEST_CASE("ad is linear and a self-representation") {
    std::mt19937_64 rng(103);
    LieAlgebra l = sl2_hef();
    for (int t = 0; t < 10; ++t) {
        Vec x = rand_vec(rng, 3), y = rand_vec(rng, 3);
        Vec xy(3);
        for (size_t i = 0; i < 3; ++i) xy[i] = x[i] + y[i];
        CHECK(ad(l, xy) == ad(l, x) + ad(l, y));
        CHECK(ad(l, l.bracket(x, y)) == commutator(ad(l, x), ad(l, y)));
    }
}

TEST_CASE("killing forms of the fixtures") {
    CHECK(killing(abelian(3)).is_zero());
    Mat k3 = killing(so3_cyclic());
    CHECK(k3 == Rat(-2) * Mat::identity(3));
    Mat ksl2 = killing(sl2_hef());
    CHECK(ksl2(0, 0) == 8);
    CHECK(ksl2(1, 2) == 4);
    CHECK(ksl2(2, 1) == 4);
    CHECK(ksl2(0, 1) == 0);
    CHECK(ksl2(0, 2) == 0);
    CHECK(ksl2(1, 1) == 0);
    CHECK(ksl2(2, 2) == 0);
    CHECK(det(ksl2) == -128);
}

TEST_CASE("killing form is invariant") {
    for (const LieAlgebra& l : {so3_cyclic(), sl2_hef(), heisenberg3()}) {
        Mat k = killing(l);
        size_t n = l.dim;
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z) {
                    // k([x,y],z) + k(y,[x,z]) = 0
                    Rat s = 0;
                    for (size_t m = 0; m < n; ++m)
                        s += l.c(x, y, m) * k(m, z) + l.c(x, z, m) * k(y, m);
                    CHECK(s == 0);
                }
    }
}

TEST_CASE("lower central series fixtures") {
    LowerCentralSeries a = lower_central_series(abelian(2));
    CHECK(a.nilpotent);
    CHECK(*a.nil_class == 1);

    LowerCentralSeries h = lower_central_series(heisenberg3());
    CHECK(h.nilpotent);
    CHECK(*h.nil_class == 2);

    LowerCentralSeries s = lower_central_series(sl2_hef());
    CHECK(!s.nilpotent);
    CHECK(s.chain.back() == Subspace::full(3));
}

TEST_CASE("series is monotone and stabilizes within dim steps") {
    for (const LieAlgebra& l : {so3_cyclic(), sl2_hef(), heisenberg3(), abelian(4)}) {
        LowerCentralSeries s = lower_central_series(l);
        CHECK(s.chain.size() <= l.dim + 1);
        for (size_t i = 1; i < s.chain.size(); ++i) {
            CHECK(s.chain[i - 1].contains(s.chain[i]));
            CHECK(s.chain[i].dim() < s.chain[i - 1].dim());
        }
    }
}

TEST_CASE("semisimplicity by Cartan's criterion") {
    CHECK(!is_semisimple(abelian(2)));
    CHECK(is_semisimple(sl2_hef()));
    CHECK(is_semisimple(so3_cyclic()));
    CHECK(!is_semisimple(heisenberg3()));
}

TEST_CASE("bracket_subspaces fixtures") {
    LieAlgebra h = heisenberg3();
    Subspace g = Subspace::full(3);
    CHECK(bracket_subspaces(h, g, Subspace::zero(3)).is_zero());
    Subspace der = bracket_subspaces(h, g, g);
    CHECK(der == Subspace::span(3, {{Rat(0), Rat(0), Rat(1)}}));
}

TEST_CASE("centralizer fixtures") {
    LieAlgebra h = heisenberg3();
    Subspace g = Subspace::full(3);
    Subspace center_dir = Subspace::span(3, {{Rat(0), Rat(0), Rat(1)}});
    CHECK(centralizer_in(h, g, Subspace::zero(3)) == g);
    CHECK(centralizer_in(h, g, center_dir) == g);
    // Centralizer of everything in the Heisenberg algebra is its center.
    CHECK(centralizer_in(h, g, g) == center_dir);
}

TEST_CASE("homomorphism law detects broken images") {
    LieAlgebra sl2 = sl2_hef();
    Representation rep;
    rep.acting = sl2;
    rep.module_dim = 3;
    rep.images = basis_adjoints(sl2);
    CHECK(!homomorphism_violation(rep).has_value());
    rep.images[1](0, 0) += 1;
    CHECK(homomorphism_violation(rep).has_value());
}

TEST_CASE("subalgebra extraction") {
    LieAlgebra sl2 = sl2_hef();
    // span{h, e} is a solvable subalgebra.
    Subspace s = Subspace::span(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
    LieAlgebra sub = subalgebra(sl2, s);
    CHECK(sub.dim == 2);
    CHECK(validate_lie(sub).valid);
    CHECK(sub.c(0, 1, 1) == 2);  // [h, e] = 2e
    // span{e, f} is not closed.
    Subspace bad = Subspace::span(3, {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    CHECK_THROWS_AS(subalgebra(sl2, bad), structural_error);
}
