#ifndef SPECON_PRODUCTS_HPP
#define SPECON_PRODUCTS_HPP

#include "specon/poly.hpp"
#include "specon/symmetric_pair.hpp"
#include "specon/tensor.hpp"

namespace specon {

/// Bilinear product on m in the pair's canonical m-coordinates:
/// alpha(u_i, u_j) = sum_k a(i,j,k) u_k. Commutativity, associativity and
/// invariance are verified properties, never stored assumptions.
struct ProductTensor {
    size_t dim = 0;
    Tensor3 a;

    ProductTensor() = default;
    explicit ProductTensor(size_t p) : dim(p), a(p) {}

    bool operator==(const ProductTensor& o) const { return dim == o.dim && a == o.a; }
    bool is_zero() const { return a.is_zero(); }
};

/// Operator alpha_u: v -> alpha(u, v).
Mat left_operator(const ProductTensor& t, const Vec& u_coords);

/// Echelon-canonical basis of the commutative, invariant products on m:
/// the kernel of the stacked commutativity/invariance system.
std::vector<ProductTensor> candidate_space(const SymmetricPair& p);

enum class SolveStatus { complete, complete_linear_subvariety, constraints_only };

std::string solve_status_name(SolveStatus s);

struct SolutionSet {
    std::vector<ProductTensor> candidate_basis;
    std::vector<MPoly> quadratic_constraints;  // associativity in W-coordinates
    std::vector<AffineComponent> components;   // solution components, W-coordinates
    std::vector<ProductTensor> solutions;      // representatives; zero always listed
    std::vector<std::string> notes;            // residuals / curved parametrizations
    SolveStatus status = SolveStatus::constraints_only;
};

/// Tiered exact solve of the associativity constraints over the candidate
/// space: trivial kernel, identically-zero constraints, elimination with
/// rational-root branching (dim W <= max_params), else constraints emitted.
SolutionSet solve_special(const SymmetricPair& p, size_t max_params = 3);

struct VerifyReport {
    bool commutative = false;
    bool associative = false;
    bool invariant = false;
    std::optional<LieViolation> first_witness;  // for the first failed property
    bool ok() const { return commutative && associative && invariant; }
};

VerifyReport verify_special(const SymmetricPair& p, const ProductTensor& t);

/// T[i][j][k] = a[i][j][k] - a[j][i][k].
Tensor3 torsion(const ProductTensor& t);

struct CurvatureTensor {
    size_t dim = 0;
    Tensor4 r;  // r(i,j,l,k): coefficient of u_k in R(u_i,u_j)u_l
};

/// R(u,v)w = alpha(u, alpha(v,w)) - alpha(v, alpha(u,w)) - [[u,v],w];
/// the canonical curvature is curvature(p, ProductTensor(p.m_dim())).
CurvatureTensor curvature(const SymmetricPair& p, const ProductTensor& t);

struct SemiSymmetryReport {
    bool ok = false;
    std::optional<std::array<size_t, 4>> witness;
};

/// [R(x,y), R(z,w)] = R(R(x,y)z, w) + R(z, R(x,y)w) on all basis quadruples.
SemiSymmetryReport semi_symmetry_check(const CurvatureTensor& r);

struct HolonomyAlgebra {
    size_t module_dim = 0;
    Subspace generators;  // inside the p*p endomorphism coordinates
    bool closed = false;
};

/// Holonomy algebra of a verified special product: span of ad restricted to
/// m over [m,m] together with alpha_w over w in [[m,m],m]; rejects
/// non-special products with the failed property.
HolonomyAlgebra holonomy(const SymmetricPair& p, const ProductTensor& t);

/// u * v = k(u,v) e0 for a central e0; rejected when e0 is zero or not
/// central. The result is a Poisson structure on l (verified).
ProductTensor poisson_from_center(const LieAlgebra& l, const Vec& e0);

/// Is t commutative, associative and ad(g)-invariant on all of l?
VerifyReport verify_poisson(const LieAlgebra& l, const ProductTensor& t);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// The pair (g + g, swap); m identifies with g by u -> (u, -u).
SymmetricPair double_pair(const LieAlgebra& g);

/// Pushes a verified Poisson structure through the identification onto the
/// double pair's m; the result passes verify_special there.
std::pair<SymmetricPair, ProductTensor> transport_to_double(const LieAlgebra& l,
                                                            const ProductTensor& t);

}  // namespace specon

#endif
