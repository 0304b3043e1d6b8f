#include "specon/matrix.hpp"

namespace specon {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw structural_error("ragged row list");
        for (size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(size_t i) const {
    return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

Vec Mat::col(size_t j) const {
    Vec v(rows);
    for (size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

bool Mat::is_zero() const {
    for (const Rat& x : a)
        if (!specon::is_zero(x)) return false;
    return true;
}

bool Mat::is_symmetric() const {
    if (rows != cols) return false;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = i + 1; j < cols; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw structural_error("matrix shape mismatch in +");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw structural_error("matrix shape mismatch in -");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw structural_error("matrix shape mismatch in *");
    Mat z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const Rat& xik = x(i, k);
            if (is_zero(xik)) continue;
            for (size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

Mat operator*(const Rat& s, const Mat& x) {
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = s * x.a[i];
    return z;
}

Vec operator*(const Mat& x, const Vec& v) {
    if (x.cols != v.size()) throw structural_error("matrix/vector shape mismatch");
    Vec w(x.rows);
    for (size_t i = 0; i < x.rows; ++i) {
        Rat s = 0;
        for (size_t j = 0; j < x.cols; ++j) s += x(i, j) * v[j];
        w[i] = s;
    }
    return w;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

Rat trace(const Mat& m) {
    if (m.rows != m.cols) throw structural_error("trace of non-square matrix");
    Rat s = 0;
    for (size_t i = 0; i < m.rows; ++i) s += m(i, i);
    return s;
}

Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

RrefResult rref(const Mat& m) {
    RrefResult res;
    res.r = m;
    Mat& r = res.r;
    size_t lead = 0;
    for (size_t col = 0; col < r.cols && lead < r.rows; ++col) {
        size_t piv = lead;
        while (piv < r.rows && is_zero(r(piv, col))) ++piv;
        if (piv == r.rows) continue;
        if (piv != lead)
            for (size_t j = 0; j < r.cols; ++j) std::swap(r(lead, j), r(piv, j));
        Rat inv = 1 / r(lead, col);
        for (size_t j = col; j < r.cols; ++j) r(lead, j) *= inv;
        for (size_t i = 0; i < r.rows; ++i) {
            if (i == lead || is_zero(r(i, col))) continue;
            Rat f = r(i, col);
            for (size_t j = col; j < r.cols; ++j) r(i, j) -= f * r(lead, j);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = res.pivots.size();
    return res;
}

Rat det(const Mat& m) {
    if (m.rows != m.cols) throw structural_error("determinant of non-square matrix");
    Mat w = m;
    size_t n = w.rows;
    Rat d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(w(piv, col))) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(w(col, j), w(piv, j));
            d = -d;
        }
        d *= w(col, col);
        Rat inv = 1 / w(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (is_zero(w(i, col))) continue;
            Rat f = w(i, col) * inv;
            for (size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
        }
    }
    return d;
}

bool is_positive_definite(const Mat& m) {
    if (m.rows != m.cols) throw structural_error("positive definiteness needs a square matrix");
    if (!m.is_symmetric()) throw structural_error("positive definiteness needs a symmetric matrix");
    for (size_t k = 1; k <= m.rows; ++k) {
        Mat lead(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
        if (det(lead) <= 0) return false;
    }
    return true;
}

}  // namespace specon
