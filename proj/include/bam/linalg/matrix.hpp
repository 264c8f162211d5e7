#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bam::linalg {

// Dense row-major matrix of doubles. Rows are contiguous, which is what
// the kernel layer wants: Cholesky, triangular solves and gram updates
// all reduce to dot/axpy over row prefixes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, double scale = 1.0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::span<double> row_span(std::size_t r) { return {row(r), cols_}; }
  std::span<const double> row_span(std::size_t r) const { return {row(r), cols_}; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator*=(double s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// result = a + b*scale
Matrix add_scaled(const Matrix& a, const Matrix& b, double scale);

// y = M x
void matvec(const Matrix& m, std::span<const double> x, std::span<double> y);

// G += x x^T, full symmetric update.
void sym_rank1_update(Matrix& g, std::span<const double> x);

// Lower-triangular Cholesky factor of a symmetric positive-definite
// matrix: A = L L^T. Only the lower triangle of `a` is read.
// Returns false if the matrix is not (numerically) positive definite.
class Cholesky {
 public:
  Cholesky() = default;

  bool factor(const Matrix& a);

  const Matrix& lower() const { return l_; }
  std::size_t dim() const { return l_.rows(); }
  // log det A = 2 * sum(log diag(L))
  double log_det() const { return log_det_; }

  // Solve A x = b in place (forward then back substitution).
  void solve_in_place(std::span<double> b) const;
  // Solve L y = b in place.
  void solve_lower_in_place(std::span<double> b) const;
  // Solve L^T x = b in place.
  void solve_upper_in_place(std::span<double> b) const;

  // trace(A^{-1}) = squared Frobenius norm of L^{-1}.
  double inverse_trace() const;
  // A^{-1}, formed column by column. O(n^3); used off the hot path.
  Matrix inverse() const;

 private:
  Matrix l_;
  double log_det_ = 0.0;
};

}  // namespace bam::linalg
