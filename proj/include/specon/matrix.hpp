#ifndef SPECON_MATRIX_HPP
#define SPECON_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "specon/rational.hpp"

namespace specon {

/// Dense rational matrix, row-major. Desk-scale sizes; no sparsity.
struct Mat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    const Rat& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    static Mat identity(size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    bool is_zero() const;
    bool is_symmetric() const;
};

Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Mat& x, const Mat& y);
Mat operator*(const Rat& s, const Mat& x);
Vec operator*(const Mat& x, const Vec& v);

Mat transpose(const Mat& m);
Rat trace(const Mat& m);

/// Matrix commutator x*y - y*x.
Mat commutator(const Mat& x, const Mat& y);

struct RrefResult {
    Mat r;
    size_t rank = 0;
    std::vector<size_t> pivots;  // pivot column per nonzero row, strictly increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination, exact. Pivot choice
/// is deterministic: leftmost column first, lowest row index on ties.
RrefResult rref(const Mat& m);

/// Exact determinant (fraction elimination). Square input required.
Rat det(const Mat& m);

/// Sylvester criterion: strictly positive leading principal minors.
/// Throws structural_error unless m is square and symmetric.
bool is_positive_definite(const Mat& m);

}  // namespace specon

#endif
