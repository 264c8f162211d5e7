#pragma once

#include <span>
#include <variant>
#include <vector>

#include "bam/linalg/matrix.hpp"

namespace bam {

enum class Family { kBinomial, kGaussian, kRegression };

const char* family_name(Family f);

// One binomial observation: `successes` out of `trials`.
struct BinomialDraw {
  double successes = 0.0;
  double trials = 0.0;
};

// Additive summaries of an observation batch. Counts are real-valued so
// that fractional likelihood weights (power priors, exponential
// forgetting) stay exact: tempering an exponential-family likelihood
// scales every additive statistic linearly.
//
// Each struct also carries the data-dependent normalization pieces of
// the batch evidence (log binomial coefficients, squared norms), which
// are additive as well; without them the marginal-likelihood chain rule
// would only hold up to a constant.
struct BinomialStats {
  double successes = 0.0;
  double trials = 0.0;
  double log_coeff = 0.0;  // sum of log C(n_i, k_i) over the raw draws

  friend bool operator==(const BinomialStats&, const BinomialStats&) = default;
};

struct GaussianStats {
  double count = 0.0;
  double sum = 0.0;
  double sum_sq = 0.0;

  friend bool operator==(const GaussianStats&, const GaussianStats&) = default;
};

struct RegressionStats {
  double count = 0.0;
  linalg::Matrix gram;          // d x d, Phi^T Phi
  linalg::Matrix cross;         // d_out x d, Y^T Phi (row per output)
  std::vector<double> sq_norm;  // per-output column of Y^T Y

  std::size_t feature_dim() const { return gram.rows(); }
  std::size_t output_dim() const { return sq_norm.size(); }

  friend bool operator==(const RegressionStats&, const RegressionStats&) = default;
};

using SufficientStats = std::variant<BinomialStats, GaussianStats, RegressionStats>;

Family family(const SufficientStats& s);

// Summaries of raw batches.
BinomialStats binomial_stats(std::span<const BinomialDraw> draws);
GaussianStats gaussian_stats(std::span<const double> values);
// inputs: n x d design rows, targets: n x d_out rows.
RegressionStats regression_stats(const linalg::Matrix& inputs,
                                 const linalg::Matrix& targets);
// An empty regression summary with the right shape.
RegressionStats zero_regression_stats(std::size_t feature_dim, std::size_t output_dim);

// Componentwise addition. Families and dimensions must match.
SufficientStats merge(const SufficientStats& a, const SufficientStats& b);
// All additive fields multiplied by w in [0, 1] (tempered likelihood).
SufficientStats scale(const SufficientStats& s, double w);
// The additive identity of the same family/shape.
SufficientStats zero_like(const SufficientStats& s);
bool is_zero(const SufficientStats& s);

}  // namespace bam
