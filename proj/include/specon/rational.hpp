#ifndef SPECON_RATIONAL_HPP
#define SPECON_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace specon {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator); every algebraic decision in the library is made on these,
// never on floating point.
using Rat = mpq_class;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural misuse: shape mismatches, non-square input, bad indices.
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" with q > 0 after reduction. Rejects q = 0.
Rat parse_rat(const std::string& s);

/// Canonical form: "p/q", or just "p" when q = 1.
std::string rat_str(const Rat& x);

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

using Vec = std::vector<Rat>;

std::string vec_str(const Vec& v);

}  // namespace specon

#endif
