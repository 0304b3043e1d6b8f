#ifndef SPECON_KERNELS_HPP
#define SPECON_KERNELS_HPP

#include <array>
#include <optional>
#include <vector>

#include "specon/matrix.hpp"
#include "specon/tensor.hpp"

namespace specon::kernels {

// Data-parallel inner loops. Each kernel comes in three flavors: a serial
// reference, an OpenMP version, and an undecorated dispatcher that picks by
// problem size (the crossover thresholds come from bench/bench_kernels.cpp).
// Every output cell is computed independently, so the parallel results are
// identical entry-for-entry to the serial ones regardless of thread count.

/// Gram matrix of traces k[i][j] = tr(ops[i] * ops[j]).
Mat trace_form(const std::vector<Mat>& ops);
Mat trace_form_parallel(const std::vector<Mat>& ops);
Mat trace_form_serial(const std::vector<Mat>& ops);

/// Curvature r[i][j][l][k] = sum_r (a[j][l][r] a[i][r][k] - a[i][l][r] a[j][r][k])
/// - dbl[i][j][l][k], where dbl holds the double-bracket terms.
Tensor4 curvature_tensor(const Tensor3& a, const Tensor4& dbl);
Tensor4 curvature_tensor_parallel(const Tensor3& a, const Tensor4& dbl);
Tensor4 curvature_tensor_serial(const Tensor3& a, const Tensor4& dbl);

/// First basis quadruple (x,y,z,w), in flattened order, where
/// [R(x,y), R(z,w)] != R(R(x,y)z, w) + R(z, R(x,y)w); nullopt if none.
std::optional<std::array<size_t, 4>> semi_symmetry_violation(const Tensor4& r);
std::optional<std::array<size_t, 4>> semi_symmetry_violation_parallel(const Tensor4& r);
std::optional<std::array<size_t, 4>> semi_symmetry_violation_serial(const Tensor4& r);

/// Stacked linear system whose kernel is the space of commutative,
/// invariant products: one row per (pair i<j, coordinate k) commutativity
/// constraint, then one per (generator s, i, j, k) invariance constraint.
/// Columns are tensor coordinates (i*p + j)*p + k.
Mat product_constraint_rows(size_t p, const std::vector<Mat>& generators);
Mat product_constraint_rows_parallel(size_t p, const std::vector<Mat>& generators);
Mat product_constraint_rows_serial(size_t p, const std::vector<Mat>& generators);

/// First basis triple (i,j,l) where the associator of the product tensor is
/// nonzero; nullopt when the product is associative.
std::optional<std::array<size_t, 3>> associator_violation(const Tensor3& a);
std::optional<std::array<size_t, 3>> associator_violation_parallel(const Tensor3& a);
std::optional<std::array<size_t, 3>> associator_violation_serial(const Tensor3& a);

}  // namespace specon::kernels

#endif
