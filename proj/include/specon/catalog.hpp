#ifndef SPECON_CATALOG_HPP
#define SPECON_CATALOG_HPP

#include <map>
#include <optional>

#include "specon/jordan.hpp"

namespace specon {

/// Deterministic builders for the standard test algebras and pairs; building
/// twice with equal params yields identical records.
struct CatalogEntry {
    std::string name;
    std::map<std::string, std::string> params;
    std::optional<LieAlgebra> algebra;
    std::optional<SymmetricPair> pair;
    std::optional<NonassocAlgebra> nonassoc;
};

/// Names: so, sl, gl (param n), heisenberg, sphere-pair (param n),
/// double-pair (param base, e.g. sl2), r4-so3-pair, zero-assoc (params n,
/// i1, i2), unital-line. Unknown names or out-of-range params raise
/// parse_error (usage).
CatalogEntry build(const std::string& name, std::map<std::string, std::string> params = {});

/// Orthogonal algebra so(n) on the antisymmetric elementary basis
/// E_{ij} = e_i e_j^T - e_j e_i^T, (i,j) lexicographic with i < j.
LieAlgebra so_algebra(size_t n);

/// sl(n) on H_i = E_ii - E_{i+1,i+1} followed by the off-diagonal E_{ij}
/// in lexicographic order.
LieAlgebra sl_algebra(size_t n);

/// gl(n) on the elementary matrices in lexicographic order.
LieAlgebra gl_algebra(size_t n);

LieAlgebra heisenberg_algebra();

/// so(n+1) with conjugation by J = diag(1,...,1,-1).
SymmetricPair sphere_pair(size_t n);

/// R^4 semidirect so(3) with the sign flip on translations.
SymmetricPair r4_so3_pair();

/// Structure constants of a linearly independent family of matrices closed
/// under commutator.
LieAlgebra algebra_from_matrices(const std::vector<Mat>& basis,
                                 const std::vector<std::string>& names);

}  // namespace specon

#endif
