#pragma once

// Test-only oracles, independent of the library's recursive product
// implementations: the shuffle by explicit interleaving enumeration, the
// stuffle by overlapping-position enumeration on compositions, and binomial
// coefficients by the Pascal recurrence.

#include "mzv/ncpoly.hpp"

namespace mzv::testing {

// Enumerates every way to interleave u and v (subsets of positions).
NCPoly shuffle_oracle(const Word& u, const Word& v);

// Enumerates every pair of order-preserving, jointly surjective placements
// of the two composition part lists; overlapping slots add their parts.
// Operands must be empty or end in y.
NCPoly stuffle_oracle(const Word& u, const Word& v);

Rational pascal_binomial(unsigned n, unsigned k);

}  // namespace mzv::testing
