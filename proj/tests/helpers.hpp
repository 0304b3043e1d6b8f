#ifndef SPECON_TEST_HELPERS_HPP
#define SPECON_TEST_HELPERS_HPP

#include <random>

#include "specon/lie.hpp"
#include "specon/matrix.hpp"

namespace specon::testing {

inline Rat rand_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Vec rand_vec(std::mt19937_64& rng, size_t n) {
    Vec v(n);
    for (Rat& x : v) x = rand_rat(rng);
    return v;
}

inline Mat rand_mat(std::mt19937_64& rng, size_t r, size_t c) {
    Mat m(r, c);
    for (Rat& x : m.a) x = rand_rat(rng);
    return m;
}

// Determinant by recursive Laplace expansion: the independent oracle for
// rank/determinant checks (no elimination shared with the library path).
inline Rat laplace_det(const Mat& m) {
    size_t n = m.rows;
    if (n == 1) return m(0, 0);
    Rat s = 0;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        Mat minor(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        s += Rat(sign) * m(0, c) * laplace_det(minor);
        sign = -sign;
    }
    return s;
}

// Largest k with a nonvanishing k x k minor, fully enumerated.
inline size_t minor_rank(const Mat& m) {
    size_t rmax = std::min(m.rows, m.cols);
    for (size_t k = rmax; k >= 1; --k) {
        std::vector<size_t> rows(k), cols(k);
        std::vector<bool> rsel(m.rows, false), csel(m.cols, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                size_t ri = 0;
                Mat sub(k, k);
                for (size_t i = 0; i < m.rows; ++i) {
                    if (!rsel[i]) continue;
                    size_t cj = 0;
                    for (size_t j = 0; j < m.cols; ++j) {
                        if (!csel[j]) continue;
                        sub(ri, cj++) = m(i, j);
                    }
                    ++ri;
                }
                if (laplace_det(sub) != 0) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

// Hand-built fixtures (independent of the catalog module).

inline LieAlgebra abelian(size_t n) { return LieAlgebra(n); }

inline void set_bracket(LieAlgebra& l, size_t i, size_t j, const std::vector<std::pair<size_t, Rat>>& terms) {
    for (const auto& [k, v] : terms) {
        l.c(i, j, k) = v;
        l.c(j, i, k) = -v;
    }
}

// [e0,e1]=e2, [e1,e2]=e0, [e2,e0]=e1.
inline LieAlgebra so3_cyclic() {
    LieAlgebra l(3);
    l.basis_names = {"e1", "e2", "e3"};
    set_bracket(l, 0, 1, {{2, Rat(1)}});
    set_bracket(l, 1, 2, {{0, Rat(1)}});
    set_bracket(l, 2, 0, {{1, Rat(1)}});
    return l;
}

// Basis (h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h.
inline LieAlgebra sl2_hef() {
    LieAlgebra l(3);
    l.basis_names = {"h", "e", "f"};
    set_bracket(l, 0, 1, {{1, Rat(2)}});
    set_bracket(l, 0, 2, {{2, Rat(-2)}});
    set_bracket(l, 1, 2, {{0, Rat(1)}});
    return l;
}

// [e0,e1]=e2.
inline LieAlgebra heisenberg3() {
    LieAlgebra l(3);
    set_bracket(l, 0, 1, {{2, Rat(1)}});
    return l;
}

}  // namespace specon::testing

#endif
