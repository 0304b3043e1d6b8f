#ifndef SPECON_LIE_HPP
#define SPECON_LIE_HPP

#include <optional>
#include <string>
#include <vector>

#include "specon/subspace.hpp"
#include "specon/tensor.hpp"

namespace specon {

/// Lie algebra given by structure constants: [b_i, b_j] = sum_k c(i,j,k) b_k.
/// Antisymmetry and Jacobi are validated, not assumed, so malformed input
/// is diagnosable.
struct LieAlgebra {
    size_t dim = 0;
    std::vector<std::string> basis_names;  // empty or one name per basis vector
    Tensor3 c;

    LieAlgebra() = default;
    explicit LieAlgebra(size_t n) : dim(n), c(n) {}

    Vec bracket(const Vec& x, const Vec& y) const;

    /// [b_i, b_j] as a coordinate vector.
    Vec bracket_basis(size_t i, size_t j) const {
        Vec v(dim);
        for (size_t k = 0; k < dim; ++k) v[k] = c(i, j, k);
        return v;
    }

    std::string name_of(size_t i) const {
        return i < basis_names.size() ? basis_names[i] : "b" + std::to_string(i);
    }
};

struct LieViolation {
    std::string identity;         // "antisymmetry" or "jacobi"
    std::vector<size_t> indices;  // (i,j,k) entry or (i,j,l) triple
};

struct LieValidation {
    bool valid = true;
    std::vector<LieViolation> violations;
};

/// Reports every violated antisymmetry entry and Jacobi triple.
LieValidation validate_lie(const LieAlgebra& l);

/// Adjoint matrix of x: columns are [x, b_j] in the basis.
Mat ad(const LieAlgebra& l, const Vec& x);

/// All basis adjoints ad(b_0), ..., ad(b_{n-1}).
std::vector<Mat> basis_adjoints(const LieAlgebra& l);

/// Killing form k[i][j] = tr(ad b_i . ad b_j).
Mat killing(const LieAlgebra& l);

struct LowerCentralSeries {
    std::vector<Subspace> chain;  // g, [g,g], [g,[g,g]], ... until stable
    bool nilpotent = false;
    std::optional<size_t> nil_class;  // smallest c with chain[c] = 0
};

LowerCentralSeries lower_central_series(const LieAlgebra& l);

/// Cartan's criterion: the Killing form is nondegenerate.
bool is_semisimple(const LieAlgebra& l);

/// span{ [u, v] : u in U, v in V }, canonicalized.
Subspace bracket_subspaces(const LieAlgebra& l, const Subspace& u, const Subspace& v);

/// { w in W : [w, u] = 0 for all u in U }, computed as a nullspace.
Subspace centralizer_in(const LieAlgebra& l, const Subspace& w, const Subspace& u);

/// Representation of `acting` on a module of dimension module_dim by the
/// matrices images[i] = rho(b_i).
struct Representation {
    LieAlgebra acting;
    size_t module_dim = 0;
    std::vector<Mat> images;
};

/// Checks rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) on all basis pairs;
/// returns the first failing pair if any.
std::optional<std::pair<size_t, size_t>> homomorphism_violation(const Representation& rep);

/// Structure constants of a bracket-closed subspace in its echelon basis.
/// Throws structural_error when S is not closed under the bracket.
LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s);

}  // namespace specon

#endif
