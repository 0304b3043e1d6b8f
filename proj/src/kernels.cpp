#include "specon/kernels.hpp"

namespace specon::kernels {

namespace {

Rat trace_of_product(const Mat& x, const Mat& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) s += x(i, j) * y(j, i);
    return s;
}

void curvature_cell(const Tensor3& a, const Tensor4& dbl, Tensor4& r, size_t i, size_t j) {
    size_t p = a.n0;
    for (size_t l = 0; l < p; ++l)
        for (size_t k = 0; k < p; ++k) {
            Rat s = -dbl(i, j, l, k);
            for (size_t m = 0; m < p; ++m)
                s += a(j, l, m) * a(i, m, k) - a(i, l, m) * a(j, m, k);
            r(i, j, l, k) = s;
        }
}

// Matrix of R(x,y): rows are the image coordinate, columns the argument.
Mat curv_op(const Tensor4& r, size_t x, size_t y) {
    size_t p = r.n;
    Mat m(p, p);
    for (size_t l = 0; l < p; ++l)
        for (size_t k = 0; k < p; ++k) m(k, l) = r(x, y, l, k);
    return m;
}

bool semi_symmetry_holds_at(const Tensor4& r, size_t x, size_t y, size_t z, size_t w) {
    size_t p = r.n;
    Mat rxy = curv_op(r, x, y);
    Mat rzw = curv_op(r, z, w);
    Mat lhs = rxy * rzw - rzw * rxy;
    Mat rhs(p, p);
    for (size_t s = 0; s < p; ++s) {
        if (!is_zero(r(x, y, z, s))) rhs = rhs + r(x, y, z, s) * curv_op(r, s, w);
        if (!is_zero(r(x, y, w, s))) rhs = rhs + r(x, y, w, s) * curv_op(r, z, s);
    }
    return lhs == rhs;
}

void constraint_row_shape(size_t p, size_t gens, size_t& comm_rows, size_t& total_rows) {
    comm_rows = p * (p - 1) / 2 * p;
    total_rows = comm_rows + gens * p * p * p;
}

// Commutativity rows come first, ordered by (i<j, k); each row says
// a[i][j][k] - a[j][i][k] = 0.
void fill_comm_row(Mat& m, size_t p, size_t row, size_t i, size_t j, size_t k) {
    m(row, (i * p + j) * p + k) += 1;
    m(row, (j * p + i) * p + k) -= 1;
}

// Invariance row for generator g and slot (i,j,k):
// sum_l g[k][l] a[i][j][l] - g[l][i] a[l][j][k] - g[l][j] a[i][l][k] = 0.
void fill_inv_row(Mat& m, size_t p, const Mat& g, size_t row, size_t i, size_t j, size_t k) {
    for (size_t l = 0; l < p; ++l) {
        m(row, (i * p + j) * p + l) += g(k, l);
        m(row, (l * p + j) * p + k) -= g(l, i);
        m(row, (i * p + l) * p + k) -= g(l, j);
    }
}

bool associator_zero_at(const Tensor3& a, size_t i, size_t j, size_t l) {
    size_t p = a.n0;
    for (size_t k = 0; k < p; ++k) {
        Rat s = 0;
        for (size_t m = 0; m < p; ++m) s += a(i, j, m) * a(m, l, k) - a(j, l, m) * a(i, m, k);
        if (!is_zero(s)) return false;
    }
    return true;
}

}  // namespace

Mat trace_form_serial(const std::vector<Mat>& ops) {
    size_t n = ops.size();
    Mat k(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) {
            k(i, j) = trace_of_product(ops[i], ops[j]);
            k(j, i) = k(i, j);
        }
    return k;
}

Mat trace_form_parallel(const std::vector<Mat>& ops) {
    size_t n = ops.size();
    Mat k(n, n);
    long total = static_cast<long>(n * (n + 1) / 2);
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < total; ++t) {
        // Unrank t into (i, j), j <= i.
        size_t i = 0, acc = 0;
        while (acc + i + 1 <= static_cast<size_t>(t)) acc += ++i;
        size_t j = static_cast<size_t>(t) - acc;
        Rat v = trace_of_product(ops[i], ops[j]);
        k(i, j) = v;
        if (i != j) k(j, i) = v;
    }
    return k;
}

Tensor4 curvature_tensor_serial(const Tensor3& a, const Tensor4& dbl) {
    size_t p = a.n0;
    Tensor4 r(p);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) curvature_cell(a, dbl, r, i, j);
    return r;
}

Tensor4 curvature_tensor_parallel(const Tensor3& a, const Tensor4& dbl) {
    size_t p = a.n0;
    Tensor4 r(p);
#pragma omp parallel for schedule(static)
    for (long t = 0; t < static_cast<long>(p * p); ++t)
        curvature_cell(a, dbl, r, static_cast<size_t>(t) / p, static_cast<size_t>(t) % p);
    return r;
}

std::optional<std::array<size_t, 4>> semi_symmetry_violation_serial(const Tensor4& r) {
    size_t p = r.n;
    for (size_t x = 0; x < p; ++x)
        for (size_t y = 0; y < p; ++y)
            for (size_t z = 0; z < p; ++z)
                for (size_t w = 0; w < p; ++w)
                    if (!semi_symmetry_holds_at(r, x, y, z, w))
                        return std::array<size_t, 4>{x, y, z, w};
    return std::nullopt;
}

std::optional<std::array<size_t, 4>> semi_symmetry_violation_parallel(const Tensor4& r) {
    size_t p = r.n;
    long total = static_cast<long>(p * p * p * p);
    long best = total;
#pragma omp parallel
    {
        long local = total;
#pragma omp for schedule(dynamic, 16) nowait
        for (long t = 0; t < total; ++t) {
            if (t >= local) continue;
            size_t x = t / (p * p * p), rem = t % (p * p * p);
            size_t y = rem / (p * p);
            size_t z = (rem / p) % p;
            size_t w = rem % p;
            if (!semi_symmetry_holds_at(r, x, y, z, w)) local = std::min(local, t);
        }
#pragma omp critical
        best = std::min(best, local);
    }
    if (best == total) return std::nullopt;
    size_t x = best / (p * p * p), rem = best % (p * p * p);
    return std::array<size_t, 4>{x, rem / (p * p), (static_cast<size_t>(rem) / p) % p,
                                 static_cast<size_t>(rem) % p};
}

Mat product_constraint_rows_serial(size_t p, const std::vector<Mat>& generators) {
    size_t comm_rows, total;
    constraint_row_shape(p, generators.size(), comm_rows, total);
    Mat m(total, p * p * p);
    size_t row = 0;
    for (size_t i = 0; i < p; ++i)
        for (size_t j = i + 1; j < p; ++j)
            for (size_t k = 0; k < p; ++k) fill_comm_row(m, p, row++, i, j, k);
    for (const Mat& g : generators)
        for (size_t i = 0; i < p; ++i)
            for (size_t j = 0; j < p; ++j)
                for (size_t k = 0; k < p; ++k) fill_inv_row(m, p, g, row++, i, j, k);
    return m;
}

Mat product_constraint_rows_parallel(size_t p, const std::vector<Mat>& generators) {
    size_t comm_rows, total;
    constraint_row_shape(p, generators.size(), comm_rows, total);
    Mat m(total, p * p * p);
    // Pair (i<j) list so commutativity rows can be filled independently.
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < p; ++i)
        for (size_t j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
#pragma omp parallel for schedule(static)
    for (long t = 0; t < static_cast<long>(comm_rows); ++t) {
        auto [i, j] = pairs[t / p];
        fill_comm_row(m, p, t, i, j, static_cast<size_t>(t) % p);
    }
    long inv_total = static_cast<long>(generators.size() * p * p * p);
#pragma omp parallel for schedule(static)
    for (long t = 0; t < inv_total; ++t) {
        size_t s = t / (p * p * p), rem = t % (p * p * p);
        size_t i = rem / (p * p), j = (rem / p) % p, k = rem % p;
        fill_inv_row(m, p, generators[s], comm_rows + t, i, j, k);
    }
    return m;
}

std::optional<std::array<size_t, 3>> associator_violation_serial(const Tensor3& a) {
    size_t p = a.n0;
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j)
            for (size_t l = 0; l < p; ++l)
                if (!associator_zero_at(a, i, j, l)) return std::array<size_t, 3>{i, j, l};
    return std::nullopt;
}

std::optional<std::array<size_t, 3>> associator_violation_parallel(const Tensor3& a) {
    size_t p = a.n0;
    long total = static_cast<long>(p * p * p);
    long best = total;
#pragma omp parallel
    {
        long local = total;
#pragma omp for schedule(dynamic, 8) nowait
        for (long t = 0; t < total; ++t) {
            if (t >= local) continue;
            size_t i = t / (p * p), j = (static_cast<size_t>(t) / p) % p, l = t % p;
            if (!associator_zero_at(a, i, j, l)) local = std::min(local, t);
        }
#pragma omp critical
        best = std::min(best, local);
    }
    if (best == total) return std::nullopt;
    return std::array<size_t, 3>{static_cast<size_t>(best) / (p * p),
                                 (static_cast<size_t>(best) / p) % p,
                                 static_cast<size_t>(best) % p};
}

// Size dispatch: thresholds sit at the measured serial/parallel crossovers
// (see bench/bench_kernels.cpp); below them thread startup dominates.

Mat trace_form(const std::vector<Mat>& ops) {
    size_t n = ops.size();
    size_t dim = n ? ops[0].rows : 0;
    size_t work = n * (n + 1) / 2 * dim * dim;
    return work >= 2000 ? trace_form_parallel(ops) : trace_form_serial(ops);
}

Tensor4 curvature_tensor(const Tensor3& a, const Tensor4& dbl) {
    size_t p = a.n0;
    size_t work = p * p * p * p * p;
    return work >= 3000 ? curvature_tensor_parallel(a, dbl) : curvature_tensor_serial(a, dbl);
}

std::optional<std::array<size_t, 4>> semi_symmetry_violation(const Tensor4& r) {
    size_t p = r.n;
    size_t work = p * p * p * p * p * p * p;
    return work >= 8000 ? semi_symmetry_violation_parallel(r) : semi_symmetry_violation_serial(r);
}

Mat product_constraint_rows(size_t p, const std::vector<Mat>& generators) {
    size_t comm_rows, total;
    constraint_row_shape(p, generators.size(), comm_rows, total);
    return total * p * p * p >= 2000000 ? product_constraint_rows_parallel(p, generators)
                                        : product_constraint_rows_serial(p, generators);
}

std::optional<std::array<size_t, 3>> associator_violation(const Tensor3& a) {
    size_t p = a.n0;
    size_t work = p * p * p * p * p;
    return work >= 2000000 ? associator_violation_parallel(a) : associator_violation_serial(a);
}

}  // namespace specon::kernels
