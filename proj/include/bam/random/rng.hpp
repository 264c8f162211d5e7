#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace bam::random {

// Counter-based PRNG (Philox 4x32, 10 rounds). A stream is identified by
// (seed, stream id); distinct ids give statistically independent streams,
// so adding a consumer never perturbs the draws of another. All
// distributions are implemented here rather than via <random> so results
// are reproducible across standard libraries.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on [0,1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  // Uniform integer on [0, bound), bound >= 1.
  std::uint64_t uniform_int(std::uint64_t bound);
  // Standard normal via the Marsaglia polar method.
  double normal();
  // Gamma(shape, 1), shape > 0 (Marsaglia-Tsang).
  double gamma(double shape);
  // Beta(a, b) as a gamma ratio.
  double beta(double a, double b);
  // Number of failures before the first success, p in (0, 1].
  std::int64_t geometric(double p);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_;
  unsigned block_pos_;
  double cached_normal_;
  bool has_cached_normal_;
};

// FNV-1a hash of the given parts, used to derive stream ids from
// (method, purpose, index...) labels.
std::uint64_t stream_id(std::initializer_list<std::string_view> parts);
std::uint64_t stream_id(std::string_view part);

}  // namespace bam::random
