#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace relwave::simd {

// Data-parallel inner loops shared by quadrature, dictionary scans and error
// metrics. Scalar implementations are the reference; the AVX2 variants must
// agree with them up to reduction reassociation (see tests/test_simd_kernels).
//
// t denotes the height-2 trapezoid: 0 outside [-3,3], 2 on [-1,1], unit-slope
// ramps between. All buffers may be unaligned, n is arbitrary.
struct Kernels {
  const char* name;

  // out[i] = t(x[i])
  void (*trapezoid)(const double* x, double* out, std::size_t n);

  // out[i] = t(scale * (x[i] - shift))
  void (*trapezoid_scaled)(const double* x, double* out, std::size_t n,
                           double scale, double shift);

  // sum_i max(0, v[i] + shift)
  double (*relu_shift_sum)(const double* v, std::size_t n, double shift);

  // out[i] = ca * max(0, tk[i] + a) + cb * max(0, tk1[i] + b)
  void (*psi_row)(const double* tk, const double* tk1, double* out,
                  std::size_t n, double a, double b, double ca, double cb);

  // sum_i w[i] * (ca*max(0,tk[i]+a) + cb*max(0,tk1[i]+b)); w == nullptr -> w=1
  double (*psi_weighted_sum)(const double* tk, const double* tk1,
                             const double* w, std::size_t n, double a, double b,
                             double ca, double cb);

  // sum_i (ca*max(0,tk[i]+a) + cb*max(0,tk1[i]+b))^2
  double (*psi_square_sum)(const double* tk, const double* tk1, std::size_t n,
                           double a, double b, double ca, double cb);

  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

const Kernels& scalar_kernels();

// Null when the build has no AVX2 translation unit (non-x86 targets).
const Kernels* avx2_kernels_or_null();

bool cpu_has_avx2_fma();

// Active kernel table. Resolved once: AVX2 when the CPU supports AVX2+FMA,
// scalar otherwise. RELWAVE_SIMD=scalar|avx2|auto overrides; requesting avx2
// on an unsupported CPU falls back to scalar.
const Kernels& kernels();

// Names of all tables compiled into this binary (for tests and reports).
std::vector<const Kernels*> available_kernels();

}  // namespace relwave::simd
