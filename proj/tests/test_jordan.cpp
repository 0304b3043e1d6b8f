#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "specon/catalog.hpp"

using namespace specon;
using namespace specon::testing;

namespace {

NonassocAlgebra zero_assoc_22() {
    NonassocAlgebra a(2);
    a.p(0, 0, 1) = 1;  // e1.e1 = e2
    return a;
}

NonassocAlgebra unital_line() {
    NonassocAlgebra a(1);
    a.p(0, 0, 0) = 1;
    return a;
}

// 2x2 symmetric matrices with A o B = (AB + BA)/2 on the basis
// (E11, E22, E12+E21).
NonassocAlgebra sym2_jordan() {
    std::vector<Mat> basis;
    basis.push_back(Mat(2, 2));
    basis.back()(0, 0) = 1;
    basis.push_back(Mat(2, 2));
    basis.back()(1, 1) = 1;
    basis.push_back(Mat(2, 2));
    basis.back()(0, 1) = 1;
    basis.back()(1, 0) = 1;
    NonassocAlgebra a(3);
    // Coordinates of a symmetric matrix in the basis.
    auto coords = [](const Mat& m) { return Vec{m(0, 0), m(1, 1), m(0, 1)}; };
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Mat prod = Rat(1, 2) * (basis[i] * basis[j] + basis[j] * basis[i]);
            Vec c = coords(prod);
            for (size_t k = 0; k < 3; ++k) a.p(i, j, k) = c[k];
        }
    return a;
}

// Lie algebra viewed as a (left) Leibniz algebra.
NonassocAlgebra lie_as_leibniz(const LieAlgebra& l) {
    NonassocAlgebra a(l.dim);
    a.p = l.c;
    return a;
}

// Independent lower-central-series oracle by brute-force spans.
size_t chain_class_oracle(const LieAlgebra& l) {
    Subspace g = Subspace::full(l.dim);
    Subspace cur = g;
    size_t steps = 0;
    while (!cur.is_zero()) {
        Subspace next = bracket_subspaces(l, g, cur);
        REQUIRE(cur.contains(next));
        REQUIRE(next.dim() < cur.dim());
        cur = next;
        ++steps;
    }
    return steps;
}

}  // namespace

TEST_CASE("flags of the zero-associative family") {
    AlgebraFlags f = classify_algebra(zero_assoc_22());
    CHECK(f.commutative);
    CHECK(f.associative);
    CHECK(f.jordan);
    CHECK(f.zero_associative);
    CHECK(f.symmetric_leibniz);
}

TEST_CASE("flags of the symmetric-matrix Jordan algebra") {
    AlgebraFlags f = classify_algebra(sym2_jordan());
    CHECK(f.commutative);
    CHECK(f.jordan);
    CHECK(!f.associative);
    CHECK(!f.zero_associative);
}

TEST_CASE("flags of the zero product and the unital line") {
    AlgebraFlags z = classify_algebra(NonassocAlgebra(2));
    CHECK(z.commutative);
    CHECK(z.associative);
    CHECK(z.jordan);
    CHECK(z.zero_associative);
    CHECK(z.symmetric_leibniz);

    AlgebraFlags u = classify_algebra(unital_line());
    CHECK(u.commutative);
    CHECK(u.associative);
    CHECK(u.jordan);
    CHECK(!u.zero_associative);
    CHECK(!u.symmetric_leibniz);
}

TEST_CASE("left multiplication tables") {
    NonassocAlgebra a = zero_assoc_22();
    CHECK(left_mult(NonassocAlgebra(2), Vec{Rat(1), Rat(1)}).is_zero());
    Mat l1 = left_mult(a, Vec{Rat(1), Rat(0)});
    CHECK(l1.col(0) == Vec{Rat(0), Rat(1)});
    CHECK(l1.col(1) == Vec{Rat(0), Rat(0)});
    // Linearity in x.
    std::mt19937_64 rng(31);
    NonassocAlgebra s = sym2_jordan();
    for (int t = 0; t < 8; ++t) {
        Vec x = rand_vec(rng, 3), y = rand_vec(rng, 3);
        Vec xy(3);
        for (size_t i = 0; i < 3; ++i) xy[i] = x[i] + y[i];
        CHECK(left_mult(s, xy) == left_mult(s, x) + left_mult(s, y));
    }
}

TEST_CASE("a Lie bracket symmetrizes to the zero product") {
    NonassocAlgebra lz = lie_as_leibniz(so3_cyclic());
    AlgebraFlags f = classify_algebra(lz);
    CHECK(f.symmetric_leibniz);
    NonassocAlgebra s = symmetrize_leibniz(lz);
    CHECK(s.p.is_zero());
}

TEST_CASE("symmetrizing the zero-associative example doubles the product") {
    NonassocAlgebra s = symmetrize_leibniz(zero_assoc_22());
    CHECK(s.p(0, 0, 1) == 2);
    AlgebraFlags f = classify_algebra(s);
    CHECK(f.commutative);
    CHECK(f.zero_associative);
}

TEST_CASE("symmetrize rejects non-Leibniz input with a witness") {
    bool witnessed = false;
    try {
        symmetrize_leibniz(unital_line());
    } catch (const rejection& r) {
        witnessed = true;
        CHECK(r.witness.size() == 2);
    }
    CHECK(witnessed);
}

TEST_CASE("tkk of the zero algebra is abelian of the same dimension") {
    GradedLieAlgebra g = tkk(NonassocAlgebra(3));
    CHECK(g.lie.dim == 3);
    CHECK(g.grade_dim(-1) == 3);
    CHECK(g.grade_dim(0) == 0);
    CHECK(g.grade_dim(1) == 0);
    CHECK(g.lie.c.is_zero());
}

TEST_CASE("tkk of the e1.e1 = e2 algebra") {
    // Oracle: the spanning sets reduce to L_{e1} in grade 0 and the product
    // map alone in grade +1.
    NonassocAlgebra a = zero_assoc_22();
    GradedLieAlgebra g = tkk(a);
    CHECK(g.lie.dim == 4);
    CHECK(g.grade_dim(-1) == 2);
    CHECK(g.grade_dim(0) == 1);
    CHECK(g.grade_dim(1) == 1);
    CHECK(validate_lie(g.lie).valid);

    // Grading respected: [g_i, g_j] lands in grade i+j, zero outside.
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            int grade = g.grades[i] + g.grades[j];
            Vec br = g.lie.bracket_basis(i, j);
            for (size_t k = 0; k < 4; ++k) {
                if (is_zero(br[k])) continue;
                CHECK(grade >= -1);
                CHECK(grade <= 1);
                CHECK(g.grades[k] == grade);
            }
        }

    // Induced involution is an automorphism.
    CHECK(!involution_violation(g.lie, induced_involution(g)).has_value());

    // Lower central series against the brute-force chain oracle: the chain
    // g > [g,g] > [g,[g,g]] > 0 has length 3 here.
    LowerCentralSeries lcs = lower_central_series(g.lie);
    CHECK(lcs.nilpotent);
    size_t oracle = chain_class_oracle(g.lie);
    CHECK(*lcs.nil_class == oracle);
    CHECK(oracle == 3);
}

TEST_CASE("tkk of the unital line is semisimple of dimension 3") {
    GradedLieAlgebra g = tkk(unital_line());
    CHECK(g.lie.dim == 3);
    CHECK(validate_lie(g.lie).valid);
    CHECK(is_semisimple(g.lie));
}

TEST_CASE("tkk accepts the non-associative Jordan algebra of symmetric matrices") {
    GradedLieAlgebra g = tkk(sym2_jordan());
    CHECK(validate_lie(g.lie).valid);
    CHECK(g.grade_dim(-1) == 3);
    // Grade 0 holds the L_x and their commutators.
    CHECK(g.grade_dim(0) >= 3);
}

TEST_CASE("tkk rejects non-Jordan input") {
    NonassocAlgebra bad(2);
    bad.p(0, 1, 0) = 1;  // not commutative
    CHECK_THROWS_AS(tkk(bad), rejection);
}

TEST_CASE("grade 0 acts on grade -1 by its defining matrices") {
    NonassocAlgebra a = zero_assoc_22();
    GradedLieAlgebra g = tkk(a);
    // Single grade-0 generator: L_{e1}.
    std::vector<size_t> g0 = g.grade_indices(0);
    REQUIRE(g0.size() == 1);
    Mat l1 = left_mult(a, Vec{Rat(1), Rat(0)});
    for (size_t j = 0; j < 2; ++j) {
        Vec br = g.lie.bracket_basis(g0[0], j);
        Vec expect = l1.col(j);
        for (size_t k = 0; k < 2; ++k) CHECK(br[k] == expect[k]);
        for (size_t k = 2; k < 4; ++k) CHECK(br[k] == 0);
    }
}

TEST_CASE("left multiplications compose to zero on 0-associative algebras") {
    NonassocAlgebra a = zero_assoc_22();
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Vec ei(2), ej(2);
            ei[i] = 1;
            ej[j] = 1;
            CHECK((left_mult(a, ei) * left_mult(a, ej)).is_zero());
        }
}

TEST_CASE("special product from the zero-associative family") {
    auto [pair, prod] = tkk_special_product(zero_assoc_22());
    CHECK(pair.m_dim() == 3);
    CHECK(pair.h_dim() == 1);
    CHECK(!prod.is_zero());
    CHECK(prod.a(0, 0, 1) == 1);
    // Only that entry is nonzero.
    Rat total = 0;
    for (const Rat& x : prod.a.a) total += abs(x);
    CHECK(total == 1);
    CHECK(verify_special(pair, prod).ok());
}

TEST_CASE("special product of the zero algebra is trivial but valid") {
    auto [pair, prod] = tkk_special_product(NonassocAlgebra(2));
    CHECK(prod.is_zero());
    CHECK(verify_special(pair, prod).ok());
}

TEST_CASE("special product extraction rejects the unital line") {
    CHECK_THROWS_AS(tkk_special_product(unital_line()), rejection);
}

TEST_CASE("h^A is abelian for commutative associative algebras") {
    // A = Q[x]/(x^2): basis (1, x).
    NonassocAlgebra a(2);
    a.p(0, 0, 0) = 1;
    a.p(0, 1, 1) = 1;
    a.p(1, 0, 1) = 1;
    AlgebraFlags f = classify_algebra(a);
    REQUIRE(f.commutative);
    REQUIRE(f.associative);
    GradedLieAlgebra g = tkk(a);
    std::vector<size_t> h_idx = g.grade_indices(0);
    for (size_t i : h_idx)
        for (size_t j : h_idx) {
            Vec br = g.lie.bracket_basis(i, j);
            for (const Rat& x : br) CHECK(x == 0);
        }
}
