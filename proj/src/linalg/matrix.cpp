#include "bam/linalg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bam/simd/kernels.hpp"

namespace bam::linalg {

Matrix Matrix::identity(std::size_t n, double scale) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = scale;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (!same_shape(other)) throw std::invalid_argument("Matrix +=: shape mismatch");
  simd::axpy(1.0, other.data(), data(), size());
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  simd::scal(s, data(), size());
  return *this;
}

Matrix add_scaled(const Matrix& a, const Matrix& b, double scale) {
  if (!a.same_shape(b)) throw std::invalid_argument("add_scaled: shape mismatch");
  Matrix out = a;
  simd::axpy(scale, b.data(), out.data(), out.size());
  return out;
}

void matvec(const Matrix& m, std::span<const double> x, std::span<double> y) {
  if (x.size() != m.cols() || y.size() != m.rows())
    throw std::invalid_argument("matvec: dimension mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r)
    y[r] = simd::dot(m.row(r), x.data(), m.cols());
}

void sym_rank1_update(Matrix& g, std::span<const double> x) {
  if (g.rows() != g.cols() || g.rows() != x.size())
    throw std::invalid_argument("sym_rank1_update: dimension mismatch");
  const std::size_t n = x.size();
  // Accumulate the upper triangle row by row; mirror below.
  for (std::size_t i = 0; i < n; ++i)
    simd::axpy(x[i], x.data() + i, g.row(i) + i, n - i);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
}

bool Cholesky::factor(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("Cholesky: matrix not square");
  const std::size_t n = a.rows();
  l_ = Matrix(n, n);
  log_det_ = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = a(j, j) - simd::dot(l_.row(j), l_.row(j), j);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double ljj = std::sqrt(d);
    l_(j, j) = ljj;
    log_det_ += 2.0 * std::log(ljj);
    const double inv = 1.0 / ljj;
    for (std::size_t i = j + 1; i < n; ++i)
      l_(i, j) = (a(i, j) - simd::dot(l_.row(i), l_.row(j), j)) * inv;
  }
  return true;
}

void Cholesky::solve_lower_in_place(std::span<double> b) const {
  const std::size_t n = dim();
  if (b.size() != n) throw std::invalid_argument("Cholesky solve: size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    b[i] = (b[i] - simd::dot(l_.row(i), b.data(), i)) / l_(i, i);
}

void Cholesky::solve_upper_in_place(std::span<double> b) const {
  const std::size_t n = dim();
  if (b.size() != n) throw std::invalid_argument("Cholesky solve: size mismatch");
  // Column-oriented back substitution so the inner update walks a
  // contiguous row prefix of L.
  for (std::size_t i = n; i-- > 0;) {
    b[i] /= l_(i, i);
    simd::axpy(-b[i], l_.row(i), b.data(), i);
  }
}

void Cholesky::solve_in_place(std::span<double> b) const {
  solve_lower_in_place(b);
  solve_upper_in_place(b);
}

double Cholesky::inverse_trace() const {
  const std::size_t n = dim();
  double acc = 0.0;
  std::vector<double> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), 0.0);
    col[j] = 1.0;
    solve_lower_in_place(col);
    acc += simd::sumsq(col.data() + j, n - j);
  }
  return acc;
}

Matrix Cholesky::inverse() const {
  const std::size_t n = dim();
  Matrix inv(n, n);
  std::vector<double> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), 0.0);
    col[j] = 1.0;
    solve_in_place(col);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

}  // namespace bam::linalg
