#ifndef SPECON_POLY_HPP
#define SPECON_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specon/matrix.hpp"

namespace specon {

// ---------------------------------------------------------------------------
// Univariate polynomials: coeffs[i] is the coefficient of x^i, trailing
// zeros trimmed (zero polynomial = empty vector).

using UPoly = std::vector<Rat>;

UPoly utrim(UPoly p);
int udeg(const UPoly& p);  // -1 for the zero polynomial
Rat ueval(const UPoly& p, const Rat& x);
UPoly uderiv(const UPoly& p);
UPoly uadd(const UPoly& p, const UPoly& q);
UPoly umul(const UPoly& p, const UPoly& q);

/// Remainder of p modulo q (q nonzero), exact division algorithm.
UPoly urem(UPoly p, const UPoly& q);

/// Synthetic division by (x - r); remainder must vanish.
UPoly udeflate(const UPoly& p, const Rat& r);

/// All distinct rational roots, found by divisor enumeration on the
/// integer-cleared primitive coefficients. Sorted ascending.
std::vector<Rat> rational_roots(const UPoly& p);

/// Number of distinct real roots via a Sturm chain. p nonzero.
int count_real_roots(const UPoly& p);

/// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recurrence, exact. Monic, degree = size of M.
UPoly char_poly(const Mat& m);

/// det(t*X + Y) as a polynomial in t, by Lagrange interpolation.
UPoly det_pencil(const Mat& x, const Mat& y);

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over a fixed variable count. Exponent
// vectors are the map key, zero coefficients are never stored.

class MPoly {
public:
    using Expo = std::vector<unsigned>;

    explicit MPoly(size_t nvars = 0) : nvars_(nvars) {}
    static MPoly constant(size_t nvars, const Rat& c);
    static MPoly var(size_t nvars, size_t i);

    size_t nvars() const { return nvars_; }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // 0 for the zero polynomial
    int total_degree() const;    // -1 for zero
    int degree_in(size_t var) const;

    void add_term(const Expo& e, const Rat& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& s) const;
    MPoly operator-() const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator<(const MPoly& o) const;

    /// Replaces variable `var` by `value` (a polynomial in the same
    /// variable set, not involving `var`).
    MPoly substitute(size_t var, const MPoly& value) const;

    Rat eval(const Vec& point) const;

    /// Splits off `var`: returns coefficients of var^0..var^d as
    /// polynomials in the other variables.
    std::vector<MPoly> coeffs_in(size_t var) const;

    /// Treats the polynomial as univariate in `var`; fails if others occur.
    std::optional<UPoly> as_univariate(size_t var) const;

    /// True when the polynomial involves `var`.
    bool uses(size_t var) const;

    /// Integer-cleared, content-free, sign-normalized copy (leading
    /// lex-greatest coefficient positive). Canonical for dedup/printing.
    MPoly normalized() const;

    /// Rendering like "3*w0^2 - w1*w2 + 1"; variables named w0, w1, ...
    std::string str() const;

private:
    size_t nvars_;
    std::map<Expo, Rat> terms_;
};

// ---------------------------------------------------------------------------
// Exact solver for small polynomial systems (the quadratic associativity
// systems live in <= ~4 parameters). Solutions are reported as affine
// components (point + direction span); non-affine parametrizations and
// irrational components surface as residual constraints instead of being
// dropped.

struct AffineComponent {
    Vec point;
    std::vector<Vec> directions;  // echelon rows; empty = isolated point
    bool operator==(const AffineComponent& o) const {
        return point == o.point && directions == o.directions;
    }
};

struct PolySolveResult {
    std::vector<AffineComponent> components;
    bool complete = true;            // every branch fully enumerated
    std::vector<MPoly> residual;     // constraints from unresolved branches
    std::vector<std::string> notes;  // non-affine parametrized branches
};

PolySolveResult solve_poly_system(size_t nvars, const std::vector<MPoly>& system);

}  // namespace specon

#endif
