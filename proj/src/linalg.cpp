#include "mzv/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mzv {

ReducedSystem::ReducedSystem(RatMatrix a)
    : a_(a), transform_(a.rows(), a.rows()) {
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t i = 0; i < m; ++i) transform_(i, i) = 1;
  RatMatrix& r = a;  // reduced in place; a_ keeps the original
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && r(pivot, col) == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(pivot, j), r(row, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(transform_(pivot, j), transform_(row, j));
    }
    const Rational inv = Rational(1) / r(row, col);
    for (std::size_t j = col; j < n; ++j) r(row, j) *= inv;
    for (std::size_t j = 0; j < m; ++j) transform_(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || r(i, col) == 0) continue;
      const Rational f = r(i, col);
      for (std::size_t j = col; j < n; ++j) r(i, j) -= f * r(row, j);
      for (std::size_t j = 0; j < m; ++j) transform_(i, j) -= f * transform_(row, j);
    }
    pivot_cols_.push_back(col);
    ++row;
  }
  rank_ = row;
}

LinearSolution ReducedSystem::solve(const std::vector<Rational>& b) const {
  const std::size_t m = a_.rows(), n = a_.cols();
  if (b.size() != m) throw std::invalid_argument("right-hand side size mismatch");
  // beta = T b; the reduced system is (T A) x = beta
  std::vector<Rational> beta(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (transform_(i, j) != 0 && b[j] != 0) acc += transform_(i, j) * b[j];
    beta[i] = std::move(acc);
  }
  LinearSolution sol;
  sol.rank = rank_;
  sol.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < rank_; ++r) sol.x[pivot_cols_[r]] = beta[r];
  sol.consistent = true;
  for (std::size_t r = rank_; r < m; ++r) {
    if (beta[r] != 0) {
      sol.consistent = false;
      sol.certificate.assign(m, Rational(0));
      for (std::size_t j = 0; j < m; ++j) sol.certificate[j] = transform_(r, j);
      break;
    }
  }
  if (!sol.consistent) {
    sol.residual.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      Rational acc = b[i];
      for (std::size_t j = 0; j < n; ++j)
        if (a_(i, j) != 0 && sol.x[j] != 0) acc -= a_(i, j) * sol.x[j];
      sol.residual[i] = std::move(acc);
    }
  }
  return sol;
}

LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rational>& b) {
  return ReducedSystem(a).solve(b);
}

std::size_t matrix_rank(RatMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && a(pivot, col) == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != row)
      for (std::size_t j = col; j < n; ++j) std::swap(a(pivot, j), a(row, j));
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = col; j < n; ++j) a(row, j) *= inv;
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(row, j);
    }
    ++row;
  }
  return row;
}

}  // namespace mzv
