// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers must go through the runtime dispatcher (or check
// avx2::supported()) before entering.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "bam/simd/kernels.hpp"

namespace bam::simd::avx2 {

bool supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), y1);
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    _mm256_storeu_pd(y + i, y0);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

double sum(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double sumsq(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(x + i);
    const __m256d v1 = _mm256_loadu_pd(x + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(x + i);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

namespace {

// Vector cosine: Cody-Waite reduction x = k*(pi/2) + r with |r| <= pi/4,
// then fdlibm minimax kernels with quadrant selection. The two-term
// reduction keeps the absolute error below ~1e-14 for |x| <= 2^20; lanes
// beyond that (or non-finite) fall back to libm.
constexpr double kInvPio2 = 6.36619772367581382433e-01;
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Lo = 6.07710050650619224932e-11;
constexpr double kFastPathBound = 1048576.0;  // 2^20

constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

inline __m256d cos4(__m256d x) {
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kInvPio2)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Hi), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Lo), r);

  const __m256d z = _mm256_mul_pd(r, r);

  // sin kernel: r * (1 + z*(S1 + z*(...)))
  __m256d sp = _mm256_set1_pd(kS6);
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS5));
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS4));
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS3));
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS2));
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS1));
  sp = _mm256_mul_pd(sp, z);
  sp = _mm256_fmadd_pd(sp, r, r);

  // cos kernel: 1 - z/2 + z^2*(C1 + z*(...))
  __m256d cp = _mm256_set1_pd(kC6);
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC5));
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC4));
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC3));
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC2));
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC1));
  cp = _mm256_mul_pd(cp, _mm256_mul_pd(z, z));
  cp = _mm256_add_pd(cp, _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0)));

  // Quadrant q = k mod 4: 0 -> +cos, 1 -> -sin, 2 -> -cos, 3 -> +sin.
  const __m128i q32 = _mm256_cvtpd_epi32(k);
  const __m256i q = _mm256_cvtepi32_epi64(q32);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256i use_sin = _mm256_sub_epi64(
      _mm256_setzero_si256(),
      _mm256_and_si256(q, one));  // all-ones where q odd
  const __m256i negate = _mm256_slli_epi64(
      _mm256_and_si256(_mm256_add_epi64(q, one), two), 62);  // sign bit where q in {1,2}

  __m256d res = _mm256_blendv_pd(cp, sp, _mm256_castsi256_pd(use_sin));
  res = _mm256_xor_pd(res, _mm256_castsi256_pd(negate));
  return res;
}

}  // namespace

void cos_map(const double* x, double* y, std::size_t n) {
  const __m256d bound = _mm256_set1_pd(kFastPathBound);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d mag = _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
    // mag < bound fails for NaN as well, routing non-finite lanes to libm
    if (_mm256_movemask_pd(_mm256_cmp_pd(mag, bound, _CMP_LT_OQ)) != 0xF) {
      for (std::size_t j = 0; j < 4; ++j) y[i + j] = std::cos(x[i + j]);
      continue;
    }
    _mm256_storeu_pd(y + i, cos4(v));
  }
  for (; i < n; ++i) y[i] = std::cos(x[i]);
}

void quad_score(const double* x, double* y, std::size_t n, double a1,
                double b1, double a2, double b2, double c) {
  const __m256d va1 = _mm256_set1_pd(a1);
  const __m256d vb1 = _mm256_set1_pd(b1);
  const __m256d va2 = _mm256_set1_pd(a2);
  const __m256d vb2 = _mm256_set1_pd(b2);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d u = _mm256_add_pd(v, vb1);
    const __m256d w = _mm256_add_pd(v, vb2);
    __m256d acc = _mm256_fmadd_pd(_mm256_mul_pd(va1, u), u, vc);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(va2, w), w, acc);
    _mm256_storeu_pd(y + i, acc);
  }
  for (; i < n; ++i) {
    const double u = x[i] + b1;
    const double w = x[i] + b2;
    y[i] = a1 * u * u + a2 * w * w + c;
  }
}

}  // namespace bam::simd::avx2

#endif  // x86-64
