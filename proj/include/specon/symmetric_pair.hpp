#ifndef SPECON_SYMMETRIC_PAIR_HPP
#define SPECON_SYMMETRIC_PAIR_HPP

#include <cstdint>
#include <optional>

#include "specon/lie.hpp"

namespace specon {

/// Mathematical rejection: input fails a documented precondition (not a
/// structural/shape error). Carries the witnessing basis indices.
struct rejection : std::runtime_error {
    std::vector<size_t> witness;
    rejection(const std::string& msg, std::vector<size_t> w = {})
        : std::runtime_error(msg), witness(std::move(w)) {}
};

inline constexpr uint64_t kDefaultSeed = 12345;

/// Involutive automorphism of a Lie algebra, as a matrix on the basis.
struct Involution {
    Mat matrix;
};

/// First failed invariant, if any: {"square", {j}} when s^2 e_j != e_j,
/// {"automorphism", {i, j}} when s[b_i,b_j] != [s b_i, s b_j].
std::optional<LieViolation> involution_violation(const LieAlgebra& l, const Involution& s);

/// Canonical decomposition g = m + h with m = ker(s + Id), h = ker(s - Id),
/// coordinates on both fixed by their echelon bases.
struct SymmetricPair {
    LieAlgebra algebra;
    Involution involution;
    Subspace m;
    Subspace h;

    size_t m_dim() const { return m.dim(); }
    size_t h_dim() const { return h.dim(); }

    /// m-coordinates of an ambient vector lying in m.
    Vec m_coords(const Vec& v) const { return m.coords(v); }
    Vec m_vector(const Vec& coords) const { return m.from_coords(coords); }
};

/// Rejects (with witness) unless s is an involutive automorphism; verifies
/// the eigenspace split and the bracket inclusions [h,h] in h, [h,m] in m,
/// [m,m] in h.
SymmetricPair decompose(const LieAlgebra& l, const Involution& s);

/// Isotropy action of h on m in m-coordinates, its kernel, and the induced
/// faithful representation of h/kernel.
struct IsotropyData {
    Representation rep;        // acting = h as a Lie algebra in its echelon basis
    Subspace kernel;           // ambient subspace of h with rho = 0
    Representation faithful_rep;  // acting = h/kernel
};

IsotropyData isotropy(const SymmetricPair& p);

enum class Certificate { certified_irreducible, probable_irreducible, reducible_split };

std::string certificate_name(Certificate c);

struct SplitResult {
    std::vector<Subspace> summands;          // in module coordinates
    std::vector<Certificate> certificates;   // parallel to summands
    uint64_t seed = kDefaultSeed;
};

/// Direct-sum decomposition into invariant subspaces, refined as far as the
/// strategy reaches: exact commutant eigenspace splitting to a fixpoint,
/// then certification (commutant dimension 1, or dimension 2 with definite
/// determinant form) and a seeded randomized search for missed invariant
/// subspaces. A leaf that is provably reducible but has no invariant
/// complement is tagged reducible_split.
SplitResult split_module(const Representation& rep, uint64_t seed = kDefaultSeed);

/// Invariant complement of the invariant subspace u, when one exists;
/// decided by an exact linear solve for an equivariant section.
std::optional<Subspace> invariant_complement(const Representation& rep, const Subspace& u);

enum class Confidence { certified, probabilistic, undetermined };

std::string confidence_name(Confidence c);

struct Classification {
    bool simple = false;
    bool semisimple = false;
    bool strongly_semisimple = false;
    std::vector<Subspace> decomposition;  // ambient subspaces of m, sorted
    std::vector<Certificate> certificates;
    std::vector<size_t> zero_bracket_summands;  // indices with [m_i,m_i] = 0
    Confidence confidence = Confidence::undetermined;
    uint64_t seed = kDefaultSeed;
};

/// simple: one certified-irreducible summand equal to m (dim m >= 1);
/// semisimple: every leaf at least probabilistically irreducible;
/// strongly semisimple: semisimple and [m_i, m_i] != 0 for every summand.
/// With compact_h_assertion and a semisimple algebra, strong semisimplicity
/// is set by rule with certified confidence.
Classification classify(const SymmetricPair& p, bool compact_h_assertion = false,
                        uint64_t seed = kDefaultSeed);

/// True iff the form -k(u, t(v)) is positive definite (exact Sylvester).
bool is_cartan_involution(const LieAlgebra& l, const Involution& t);

}  // namespace specon

#endif
