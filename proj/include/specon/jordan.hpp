#ifndef SPECON_JORDAN_HPP
#define SPECON_JORDAN_HPP

#include "specon/products.hpp"

namespace specon {

/// Nonassociative algebra by its product tensor e_i . e_j = sum_k p(i,j,k) e_k.
/// No symmetry is assumed; everything is a checked predicate.
struct NonassocAlgebra {
    size_t dim = 0;
    std::vector<std::string> basis_names;
    Tensor3 p;

    NonassocAlgebra() = default;
    explicit NonassocAlgebra(size_t n) : dim(n), p(n) {}

    Vec multiply(const Vec& x, const Vec& y) const;

    /// e_i . e_j as a coordinate vector.
    Vec multiply_basis(size_t i, size_t j) const {
        Vec v(dim);
        for (size_t k = 0; k < dim; ++k) v[k] = p(i, j, k);
        return v;
    }
};

struct AlgebraFlags {
    bool commutative = false;
    bool associative = false;
    bool jordan = false;
    bool zero_associative = false;
    bool symmetric_leibniz = false;
};

/// Exact polynomial identity checks on basis tuples: commutativity,
/// associativity, the fully linearized Jordan identity, vanishing triple
/// products, and the two symmetric Leibniz operator identities.
AlgebraFlags classify_algebra(const NonassocAlgebra& a);

/// Matrix of y -> x.y.
Mat left_mult(const NonassocAlgebra& a, const Vec& x);

/// Matrix of y -> y.x.
Mat right_mult(const NonassocAlgebra& a, const Vec& x);

/// x * y := x.y + y.x on a symmetric Leibniz algebra; the result is
/// commutative and 0-associative. Rejects other inputs with a witness pair.
NonassocAlgebra symmetrize_leibniz(const NonassocAlgebra& a);

/// Short-graded Lie algebra with one grade label in {-1, 0, +1} per basis
/// vector.
struct GradedLieAlgebra {
    LieAlgebra lie;
    std::vector<int> grades;

    size_t grade_dim(int g) const;
    std::vector<size_t> grade_indices(int g) const;
};

/// The involution fixing grade 0 and negating grades -1 and +1.
Involution induced_involution(const GradedLieAlgebra& g);

/// Graded Lie algebra built from a Jordan algebra: grade -1 is the algebra,
/// grade 0 the span of left multiplications and their commutators inside
/// End(A), grade +1 the span of the product map and its L_x-commutators
/// inside the symmetric maps S^2 A -> A. Rejects non-Jordan input; any
/// Jacobi failure after assembly is an internal-consistency error.
GradedLieAlgebra tkk(const NonassocAlgebra& a);

/// For a commutative 0-associative algebra: the symmetric pair of tkk(a)
/// under the induced involution, with the product on m that multiplies the
/// grade -1 components and kills grade +1. Passes verify_special; nonzero
/// iff the input product is nonzero.
std::pair<SymmetricPair, ProductTensor> tkk_special_product(const NonassocAlgebra& a);

}  // namespace specon

#endif
