#pragma once

#include "mzv/ncpoly.hpp"

namespace mzv {

enum class ProductKind { concat, shuffle, harmonic };

const char* product_name(ProductKind kind);

// Word-level shuffle by the head-letter recursion
//   uw sh vw' = u(w sh vw') + v(uw sh w'),  1 sh w = w sh 1 = w,
// memoized on word pairs.
NCPoly shuffle_words(const Word& u, const Word& v);

// Word-level harmonic (stuffle) product on words in {1} + Hy:
//   z_k w * z_l w' = z_k(w * z_l w') + z_l(z_k w * w') + z_{k+l}(w * w').
NCPoly harmonic_words(const Word& u, const Word& v);

// Bilinear extensions. harmonic throws std::domain_error unless both
// operands lie in H1 = Q + Hy.
NCPoly shuffle(const NCPoly& p, const NCPoly& q);
NCPoly harmonic(const NCPoly& p, const NCPoly& q);

NCPoly product(const NCPoly& p, const NCPoly& q, ProductKind kind);

// n-fold product under the chosen multiplication; n = 0 gives 1.
NCPoly power(const NCPoly& p, unsigned n, ProductKind kind);

}  // namespace mzv
