#include "mzv/zeta.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mzv {

namespace {

double inv_power(double inv_m, unsigned k) {
  double r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= inv_m;
  return r;
}

EvalResult zeta_num_uncached(const Composition& c, long long M) {
  const std::size_t depth = c.depth();
  // T[j] carries the partial sum with j-th index outermost; T[depth] == 1.
  std::vector<double> sums(depth + 1, 0.0), comp(depth + 1, 0.0);
  sums[depth] = 1.0;
  for (long long m = 1; m <= M; ++m) {
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < depth; ++j) {
      // Kahan-compensated T_j += m^{-k_j} T_{j+1}, ascending j so that
      // T_{j+1} still holds the previous level's m-1 value.
      const double term = inv_power(inv_m, c.parts[j]) * sums[j + 1];
      const double t = term - comp[j];
      const double next = sums[j] + t;
      comp[j] = (next - sums[j]) - t;
      sums[j] = next;
    }
  }
  const double k1 = static_cast<double>(c.parts.front());
  const double tail = 2.0 * std::pow(std::log(static_cast<double>(M)) + 1.0,
                                     static_cast<double>(depth) - 1.0) *
                      std::pow(static_cast<double>(M), 1.0 - k1) / (k1 - 1.0);
  return {sums[0], tail, M};
}

}  // namespace

EvalResult zeta_num(const Composition& c, long long M) {
  if (!c.admissible())
    throw std::domain_error("zeta_num requires an admissible composition (k_1 >= 2): " + c.str());
  if (M < 10) throw std::domain_error("zeta_num requires M >= 10");
  static std::map<std::pair<Composition, long long>, EvalResult> cache;
  static std::mutex mutex;
  const auto key = std::make_pair(c, M);
  {
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const EvalResult r = zeta_num_uncached(c, M);
  std::scoped_lock lock(mutex);
  return cache.emplace(key, r).first->second;
}

EvalResult Z_num(const NCPoly& p, long long M) {
  if (!p.in_H0()) throw std::domain_error("Z_num requires an element of H0 = Q + xHy");
  EvalResult r{0.0, 0.0, M};
  for (const auto& [w, coeff] : p.terms()) {
    const double c = coeff.convert_to<double>();
    if (w.empty()) {
      r.value += c;  // Z(1) = 1 exactly, no tail
      continue;
    }
    const EvalResult term = zeta_num(composition_of_word(w), M);
    r.value += c * term.value;
    r.tail_bound += std::abs(c) * term.tail_bound;
  }
  return r;
}

double roundoff_allowance(long long M, std::size_t depth) {
  return 1e-12 * static_cast<double>(M) * static_cast<double>(depth);
}

bool kernel_check(const NCPoly& p, long long M) {
  const EvalResult r = Z_num(p, M);
  std::size_t max_depth = 0;
  for (const auto& [w, c] : p.terms()) max_depth = std::max(max_depth, w.depth());
  return std::abs(r.value) <= r.tail_bound + roundoff_allowance(M, max_depth);
}

bool homomorphism_check(const NCPoly& u, const NCPoly& v, ProductKind kind, long long M) {
  if (kind != ProductKind::shuffle && kind != ProductKind::harmonic)
    throw std::domain_error("homomorphism_check applies to shuffle or harmonic only");
  const NCPoly uv = product(u, v, kind);
  const EvalResult ru = Z_num(u, M), rv = Z_num(v, M), ruv = Z_num(uv, M);
  const double lhs = ruv.value;
  const double rhs = ru.value * rv.value;
  auto max_depth = [](const NCPoly& p) {
    std::size_t d = 0;
    for (const auto& [w, c] : p.terms()) d = std::max(d, w.depth());
    return d;
  };
  const double bound = ruv.tail_bound + std::abs(ru.value) * rv.tail_bound +
                       std::abs(rv.value) * ru.tail_bound + ru.tail_bound * rv.tail_bound +
                       roundoff_allowance(M, max_depth(uv)) + roundoff_allowance(M, max_depth(u)) +
                       roundoff_allowance(M, max_depth(v));
  return std::abs(lhs - rhs) <= bound;
}

}  // namespace mzv
