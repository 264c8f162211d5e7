#include "bam/conjugate/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bam/math/special.hpp"
#include "bam/simd/kernels.hpp"

namespace bam {

const char* family_name(Family f) {
  switch (f) {
    case Family::kBinomial: return "binomial";
    case Family::kGaussian: return "gaussian";
    case Family::kRegression: return "regression";
  }
  return "unknown";
}

Family family(const SufficientStats& s) {
  if (std::holds_alternative<BinomialStats>(s)) return Family::kBinomial;
  if (std::holds_alternative<GaussianStats>(s)) return Family::kGaussian;
  return Family::kRegression;
}

BinomialStats binomial_stats(std::span<const BinomialDraw> draws) {
  BinomialStats out;
  for (const BinomialDraw& d : draws) {
    if (d.successes < 0.0 || d.trials < d.successes)
      throw std::invalid_argument(
          "binomial_stats: require 0 <= successes <= trials");
    out.successes += d.successes;
    out.trials += d.trials;
    out.log_coeff += math::log_binomial(d.trials, d.successes);
  }
  return out;
}

GaussianStats gaussian_stats(std::span<const double> values) {
  GaussianStats out;
  out.count = static_cast<double>(values.size());
  out.sum = simd::sum(values.data(), values.size());
  out.sum_sq = simd::sumsq(values.data(), values.size());
  return out;
}

RegressionStats regression_stats(const linalg::Matrix& inputs,
                                 const linalg::Matrix& targets) {
  if (inputs.rows() != targets.rows())
    throw std::invalid_argument("regression_stats: row count mismatch");
  const std::size_t n = inputs.rows();
  const std::size_t d = inputs.cols();
  const std::size_t d_out = targets.cols();
  RegressionStats out = zero_regression_stats(d, d_out);
  out.count = static_cast<double>(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double* phi = inputs.row(r);
    // Upper triangle of the gram matrix; mirrored once at the end.
    for (std::size_t i = 0; i < d; ++i)
      simd::axpy(phi[i], phi + i, out.gram.row(i) + i, d - i);
    const double* y = targets.row(r);
    for (std::size_t j = 0; j < d_out; ++j) {
      simd::axpy(y[j], phi, out.cross.row(j), d);
      out.sq_norm[j] += y[j] * y[j];
    }
  }
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) out.gram(i, j) = out.gram(j, i);
  return out;
}

RegressionStats zero_regression_stats(std::size_t feature_dim,
                                      std::size_t output_dim) {
  RegressionStats out;
  out.gram = linalg::Matrix(feature_dim, feature_dim);
  out.cross = linalg::Matrix(output_dim, feature_dim);
  out.sq_norm.assign(output_dim, 0.0);
  return out;
}

namespace {

void check_same_family(const SufficientStats& a, const SufficientStats& b,
                       const char* op) {
  if (family(a) != family(b))
    throw std::invalid_argument(std::string(op) + ": family mismatch (" +
                                family_name(family(a)) + " vs " +
                                family_name(family(b)) + ")");
}

}  // namespace

SufficientStats merge(const SufficientStats& a, const SufficientStats& b) {
  check_same_family(a, b, "merge");
  if (const auto* ba = std::get_if<BinomialStats>(&a)) {
    const auto& bb = std::get<BinomialStats>(b);
    return BinomialStats{ba->successes + bb.successes, ba->trials + bb.trials,
                         ba->log_coeff + bb.log_coeff};
  }
  if (const auto* ga = std::get_if<GaussianStats>(&a)) {
    const auto& gb = std::get<GaussianStats>(b);
    return GaussianStats{ga->count + gb.count, ga->sum + gb.sum,
                         ga->sum_sq + gb.sum_sq};
  }
  const auto& ra = std::get<RegressionStats>(a);
  const auto& rb = std::get<RegressionStats>(b);
  if (!ra.gram.same_shape(rb.gram) || !ra.cross.same_shape(rb.cross))
    throw std::invalid_argument("merge: regression dimension mismatch");
  RegressionStats out = ra;
  out.count += rb.count;
  out.gram += rb.gram;
  out.cross += rb.cross;
  for (std::size_t j = 0; j < out.sq_norm.size(); ++j)
    out.sq_norm[j] += rb.sq_norm[j];
  return out;
}

SufficientStats scale(const SufficientStats& s, double w) {
  if (!(w >= 0.0) || w > 1.0)
    throw std::invalid_argument("scale: weight must lie in [0, 1]");
  if (const auto* b = std::get_if<BinomialStats>(&s))
    return BinomialStats{w * b->successes, w * b->trials, w * b->log_coeff};
  if (const auto* g = std::get_if<GaussianStats>(&s))
    return GaussianStats{w * g->count, w * g->sum, w * g->sum_sq};
  RegressionStats out = std::get<RegressionStats>(s);
  out.count *= w;
  out.gram *= w;
  out.cross *= w;
  simd::scal(w, out.sq_norm.data(), out.sq_norm.size());
  return out;
}

SufficientStats zero_like(const SufficientStats& s) {
  if (std::holds_alternative<BinomialStats>(s)) return BinomialStats{};
  if (std::holds_alternative<GaussianStats>(s)) return GaussianStats{};
  const auto& r = std::get<RegressionStats>(s);
  return zero_regression_stats(r.feature_dim(), r.output_dim());
}

bool is_zero(const SufficientStats& s) {
  return s == zero_like(s);
}

}  // namespace bam
