#include "specon/subspace.hpp"

namespace specon {

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    for (const Vec& v : vectors)
        if (v.size() != ambient) throw structural_error("spanning vector of wrong length");
    RrefResult rr = rref(Mat::from_rows(vectors));
    for (size_t i = 0; i < rr.rank; ++i) s.basis_.push_back(rr.r.row(i));
    s.pivots_ = rr.pivots;
    return s;
}

Subspace Subspace::full(size_t ambient) {
    std::vector<Vec> rows(ambient, Vec(ambient));
    for (size_t i = 0; i < ambient; ++i) rows[i][i] = 1;
    return span(ambient, rows);
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw structural_error("subspace ambient dimension mismatch");
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw structural_error("subspace ambient dimension mismatch");
    if (is_zero() || o.is_zero()) return zero(ambient_);
    // Columns of the stacked system are coefficients (s, t) with
    // sum_i s_i a_i = sum_j t_j b_j; kernel vectors give intersection points.
    size_t ka = dim(), kb = o.dim();
    Mat sys(ambient_, ka + kb);
    for (size_t i = 0; i < ka; ++i)
        for (size_t r = 0; r < ambient_; ++r) sys(r, i) = basis_[i][r];
    for (size_t j = 0; j < kb; ++j)
        for (size_t r = 0; r < ambient_; ++r) sys(r, ka + j) = -o.basis_[j][r];
    RrefResult rr = rref(sys);
    // Free columns parametrize the kernel; rebuild (s, t) per free column.
    std::vector<bool> is_pivot(ka + kb, false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> pts;
    for (size_t f = 0; f < ka + kb; ++f) {
        if (is_pivot[f]) continue;
        Vec coeff(ka + kb);
        coeff[f] = 1;
        for (size_t row = 0; row < rr.rank; ++row) coeff[rr.pivots[row]] = -rr.r(row, f);
        Vec pt(ambient_);
        for (size_t i = 0; i < ka; ++i)
            for (size_t r = 0; r < ambient_; ++r) pt[r] += coeff[i] * basis_[i][r];
        pts.push_back(pt);
    }
    return span(ambient_, pts);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw structural_error("vector of wrong length");
    Vec w = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        const Rat& c = w[pivots_[i]];
        if (specon::is_zero(c)) continue;
        Rat f = c;
        for (size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_[i][j];
    }
    for (const Rat& x : w)
        if (!specon::is_zero(x)) return false;
    return true;
}

bool Subspace::contains(const Subspace& o) const {
    for (const Vec& v : o.basis_)
        if (!contains(v)) return false;
    return true;
}

Vec Subspace::coords(const Vec& v) const {
    if (!contains(v)) throw structural_error("vector outside subspace");
    Vec c(dim());
    for (size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Vec Subspace::from_coords(const Vec& c) const {
    if (c.size() != dim()) throw structural_error("coordinate vector of wrong length");
    Vec v(ambient_);
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < ambient_; ++j) v[j] += c[i] * basis_[i][j];
    return v;
}

Subspace nullspace(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> vecs;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols);
        v[f] = 1;
        for (size_t row = 0; row < rr.rank; ++row) v[rr.pivots[row]] = -rr.r(row, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.cols, vecs);
}

bool Subspace::order(const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    if (x.pivots_ != y.pivots_) return x.pivots_ < y.pivots_;
    for (size_t i = 0; i < x.basis_.size(); ++i)
        for (size_t j = 0; j < x.ambient_; ++j)
            if (x.basis_[i][j] != y.basis_[i][j]) return x.basis_[i][j] < y.basis_[i][j];
    return false;
}

}  // namespace specon
