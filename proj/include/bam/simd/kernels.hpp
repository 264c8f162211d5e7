#pragma once

// Data-parallel inner-loop kernels used by the numeric layers (gram
// accumulation, Cholesky, feature maps, candidate scoring).
//
// Every kernel exists in two forms:
//   bam::simd::scalar::*  -- plain reference loops, always available
//   bam::simd::avx2::*    -- AVX2+FMA variants, compiled on x86-64
// The unqualified bam::simd::* entry points dispatch at runtime to the
// widest ISA the CPU supports. The two implementations are equivalence
// tested against each other; they are not bit-identical because vector
// accumulation reassociates sums.

#include <cstddef>

namespace bam::simd {

enum class Isa { kScalar, kAvx2 };

// ISA selected by the dispatcher for this process.
Isa active_isa();
const char* isa_name(Isa isa);

// Pin dispatch to a specific ISA (used by equivalence tests and the
// BAM_SIMD=scalar|avx2 environment override). Returns false if the
// requested ISA is not supported on this CPU.
bool force_isa(Isa isa);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);
// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
// x[i] *= a
void scal(double a, double* x, std::size_t n);
// sum_i x[i]
double sum(const double* x, std::size_t n);
// sum_i x[i]^2
double sumsq(const double* x, std::size_t n);
// y[i] = cos(x[i])
void cos_map(const double* x, double* y, std::size_t n);
// y[i] = a1*(x[i]+b1)^2 + a2*(x[i]+b2)^2 + c
// (the shape of a Gaussian evidence score as a function of a summed
// statistic; used to score selection candidates in bulk)
void quad_score(const double* x, double* y, std::size_t n, double a1,
                double b1, double a2, double b2, double c);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
void cos_map(const double* x, double* y, std::size_t n);
void quad_score(const double* x, double* y, std::size_t n, double a1,
                double b1, double a2, double b2, double c);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define BAM_HAVE_AVX2_KERNELS 1
namespace avx2 {
bool supported();
double dot(const double* a, const double* b, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
void cos_map(const double* x, double* y, std::size_t n);
void quad_score(const double* x, double* y, std::size_t n, double a1,
                double b1, double a2, double b2, double c);
}  // namespace avx2
#else
#define BAM_HAVE_AVX2_KERNELS 0
#endif

}  // namespace bam::simd
