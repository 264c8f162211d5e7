#pragma once

#include <span>

namespace bam::math {

// log Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double log_beta(double a, double b);

// Digamma (psi) for x > 0. Recurrence into the asymptotic regime, then
// the Bernoulli-number series; good to ~1e-14 relative.
double digamma(double x);

// Generalized log binomial coefficient via lgamma; n >= k >= 0, both may
// be real-valued.
double log_binomial(double n, double k);

// log sum_i exp(x[i]); -inf for an empty or all -inf input.
double log_sum_exp(std::span<const double> x);

}  // namespace bam::math
