#include <cmath>
#include <cstddef>

#include "bam/simd/kernels.hpp"

// Reference kernels. Kept as straightforward loops: these define the
// semantics the vector variants are tested against.

namespace bam::simd::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double sumsq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void cos_map(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::cos(x[i]);
}

void quad_score(const double* x, double* y, std::size_t n, double a1,
                double b1, double a2, double b2, double c) {
  for (std::size_t i = 0; i < n; ++i) {
    const double u = x[i] + b1;
    const double v = x[i] + b2;
    y[i] = a1 * u * u + a2 * v * v + c;
  }
}

}  // namespace bam::simd::scalar
