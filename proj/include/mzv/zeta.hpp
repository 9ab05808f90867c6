#pragma once

#include "mzv/ncpoly.hpp"
#include "mzv/products.hpp"

namespace mzv {

struct EvalResult {
  double value = 0.0;
  double tail_bound = 0.0;  // rigorous truncation bound
  long long M = 0;          // outer summation cutoff
};

// Truncated nested series for zeta(k_1,...,k_n), summed over m_1 <= M with
// compensated accumulation. O(M * depth) time, O(depth) memory.
// tail_bound = 2 (ln M + 1)^{depth-1} M^{1-k_1} / (k_1 - 1).
// Throws std::domain_error unless the composition is admissible and M >= 10.
EvalResult zeta_num(const Composition& c, long long M);

// Linear extension of zeta_num over an H0 polynomial; tail bounds add with
// absolute coefficients. Z_num(1) = 1 exactly.
EvalResult Z_num(const NCPoly& p, long long M);

// Fixed floating round-off allowance: 1e-12 * M * depth.
double roundoff_allowance(long long M, std::size_t depth);

// Passes iff |Z_num(p)| <= tail_bound + round-off allowance.
bool kernel_check(const NCPoly& p, long long M);

// Passes iff Z_num(u prod v) and Z_num(u) Z_num(v) agree within the
// combined bounds. kind must be shuffle or harmonic.
bool homomorphism_check(const NCPoly& u, const NCPoly& v, ProductKind kind, long long M);

}  // namespace mzv
