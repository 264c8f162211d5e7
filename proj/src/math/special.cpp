#include "bam/math/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bam::math {

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("log_beta: arguments must be positive");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: argument must be positive");
  double acc = 0.0;
  // psi(x) = psi(x+1) - 1/x until the asymptotic series is accurate.
  while (x < 6.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
  double series = inv2 * (1.0 / 12.0 -
                  inv2 * (1.0 / 120.0 -
                  inv2 * (1.0 / 252.0 -
                  inv2 * (1.0 / 240.0 -
                  inv2 * (1.0 / 132.0)))));
  return acc + std::log(x) - 0.5 * inv - series;
}

double log_binomial(double n, double k) {
  if (k < 0.0 || n < k)
    throw std::invalid_argument("log_binomial: require 0 <= k <= n");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_sum_exp(std::span<const double> x) {
  double max = -std::numeric_limits<double>::infinity();
  for (double v : x)
    if (v > max) max = v;
  if (!std::isfinite(max)) return max;  // empty, all -inf, or a +inf/NaN input
  double acc = 0.0;
  for (double v : x) acc += std::exp(v - max);
  return max + std::log(acc);
}

}  // namespace bam::math
