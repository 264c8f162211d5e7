#include "bam/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace bam::simd {

namespace {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scal)(double, double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  void (*cos_map)(const double*, double*, std::size_t);
  void (*quad_score)(const double*, double*, std::size_t, double, double,
                     double, double, double);
};

constexpr KernelTable kScalarTable = {
    scalar::dot, scalar::axpy, scalar::scal, scalar::sum,
    scalar::sumsq, scalar::cos_map, scalar::quad_score};

#if BAM_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table = {
    avx2::dot, avx2::axpy, avx2::scal, avx2::sum,
    avx2::sumsq, avx2::cos_map, avx2::quad_score};
#endif

struct Dispatch {
  KernelTable table;
  Isa isa;

  Dispatch() : table(kScalarTable), isa(Isa::kScalar) {
#if BAM_HAVE_AVX2_KERNELS
    if (avx2::supported()) {
      table = kAvx2Table;
      isa = Isa::kAvx2;
    }
#endif
    if (const char* env = std::getenv("BAM_SIMD")) {
      if (std::strcmp(env, "scalar") == 0) {
        table = kScalarTable;
        isa = Isa::kScalar;
      }
    }
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

Isa active_isa() { return dispatch().isa; }

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

bool force_isa(Isa isa) {
  Dispatch& d = dispatch();
  if (isa == Isa::kScalar) {
    d.table = kScalarTable;
    d.isa = isa;
    return true;
  }
#if BAM_HAVE_AVX2_KERNELS
  if (isa == Isa::kAvx2 && avx2::supported()) {
    d.table = kAvx2Table;
    d.isa = isa;
    return true;
  }
#endif
  return false;
}

double dot(const double* a, const double* b, std::size_t n) {
  return dispatch().table.dot(a, b, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) {
  dispatch().table.axpy(a, x, y, n);
}
void scal(double a, double* x, std::size_t n) {
  dispatch().table.scal(a, x, n);
}
double sum(const double* x, std::size_t n) { return dispatch().table.sum(x, n); }
double sumsq(const double* x, std::size_t n) {
  return dispatch().table.sumsq(x, n);
}
void cos_map(const double* x, double* y, std::size_t n) {
  dispatch().table.cos_map(x, y, n);
}
void quad_score(const double* x, double* y, std::size_t n, double a1,
                double b1, double a2, double b2, double c) {
  dispatch().table.quad_score(x, y, n, a1, b1, a2, b2, c);
}

}  // namespace bam::simd
