#ifndef SPECON_TENSOR_HPP
#define SPECON_TENSOR_HPP

#include "specon/rational.hpp"

namespace specon {

/// Dense rank-3 rational tensor (structure constants, bilinear products).
struct Tensor3 {
    size_t n0 = 0, n1 = 0, n2 = 0;
    std::vector<Rat> a;

    Tensor3() = default;
    Tensor3(size_t d0, size_t d1, size_t d2) : n0(d0), n1(d1), n2(d2), a(d0 * d1 * d2) {}
    explicit Tensor3(size_t d) : Tensor3(d, d, d) {}

    Rat& operator()(size_t i, size_t j, size_t k) { return a[(i * n1 + j) * n2 + k]; }
    const Rat& operator()(size_t i, size_t j, size_t k) const { return a[(i * n1 + j) * n2 + k]; }

    bool operator==(const Tensor3& o) const {
        return n0 == o.n0 && n1 == o.n1 && n2 == o.n2 && a == o.a;
    }

    bool is_zero() const {
        for (const Rat& x : a)
            if (!specon::is_zero(x)) return false;
        return true;
    }
};

/// Dense rank-4 rational tensor (curvature).
struct Tensor4 {
    size_t n = 0;
    std::vector<Rat> a;

    Tensor4() = default;
    explicit Tensor4(size_t d) : n(d), a(d * d * d * d) {}

    Rat& operator()(size_t i, size_t j, size_t l, size_t k) {
        return a[((i * n + j) * n + l) * n + k];
    }
    const Rat& operator()(size_t i, size_t j, size_t l, size_t k) const {
        return a[((i * n + j) * n + l) * n + k];
    }

    bool operator==(const Tensor4& o) const { return n == o.n && a == o.a; }

    bool is_zero() const {
        for (const Rat& x : a)
            if (!specon::is_zero(x)) return false;
        return true;
    }
};

}  // namespace specon

#endif
