#ifndef SPECON_SUBSPACE_HPP
#define SPECON_SUBSPACE_HPP

#include <vector>

#include "specon/matrix.hpp"

namespace specon {

/// Linear subspace of Q^n held by its reduced-row-echelon basis, so equal
/// subspaces compare equal entry-wise. The zero subspace has an empty basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : ambient_(ambient) {}

    /// Canonicalizes a spanning set (rref, zero rows dropped).
    static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
    static Subspace zero(size_t ambient) { return Subspace(ambient); }
    static Subspace full(size_t ambient);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    bool is_zero() const { return basis_.empty(); }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;

    /// Coordinates of v in the echelon basis; throws structural_error if
    /// v lies outside the subspace.
    Vec coords(const Vec& v) const;

    /// Linear combination of the basis with the given coordinates.
    Vec from_coords(const Vec& c) const;

    /// Orders subspaces by (dim, pivot sequence, basis entries); used to
    /// report decompositions deterministically.
    static bool order(const Subspace& x, const Subspace& y);

private:
    size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<size_t> pivots_;
};

/// Exact kernel of m as a canonical subspace of Q^cols.
Subspace nullspace(const Mat& m);

}  // namespace specon

#endif
