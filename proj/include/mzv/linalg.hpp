#pragma once

#include <cstddef>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> x;         // one exact solution (free variables zero)
  std::size_t rank = 0;
  // When inconsistent: residual = b - A x_hat for the partial solution, and a
  // Farkas certificate row t with t A = 0, t b != 0.
  std::vector<Rational> residual;
  std::vector<Rational> certificate;
};

// Row-reduced form of A with the row transform recorded, so many right-hand
// sides can be solved against the same matrix.
class ReducedSystem {
 public:
  explicit ReducedSystem(RatMatrix a);

  std::size_t rank() const { return rank_; }
  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }

  LinearSolution solve(const std::vector<Rational>& b) const;

 private:
  RatMatrix a_;          // original matrix
  RatMatrix transform_;  // T with T a_ in reduced row echelon form
  std::vector<std::size_t> pivot_cols_;
  std::size_t rank_ = 0;
};

// One exact solution of A x = b if consistent; otherwise an inconsistency
// report with rank, residual and certificate row.
LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rational>& b);

std::size_t matrix_rank(RatMatrix a);

}  // namespace mzv
