// AVX2+FMA variants of the kernel table. Compiled with -mavx2 -mfma in its
// own translation unit; only reachable through runtime dispatch.

#include "relwave/simd/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace relwave::simd {
namespace {

const __m256d kSign = _mm256_set1_pd(-0.0);
const __m256d kZero = _mm256_setzero_pd();

inline __m256d trap4(__m256d x) {
  __m256d ax = _mm256_andnot_pd(kSign, x);
  __m256d v = _mm256_sub_pd(_mm256_set1_pd(3.0), ax);
  v = _mm256_min_pd(v, _mm256_set1_pd(2.0));
  return _mm256_max_pd(v, kZero);
}

inline double trap1(double x) {
  double v = 3.0 - std::fabs(x);
  if (v > 2.0) v = 2.0;
  return v > 0.0 ? v : 0.0;
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swap = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swap));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d swap = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, swap));
}

void trapezoid_k(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, trap4(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = trap1(x[i]);
}

void trapezoid_scaled_k(const double* x, double* out, std::size_t n,
                        double scale, double shift) {
  const __m256d vs = _mm256_set1_pd(scale);
  const __m256d vh = _mm256_set1_pd(shift);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d arg = _mm256_mul_pd(vs, _mm256_sub_pd(_mm256_loadu_pd(x + i), vh));
    _mm256_storeu_pd(out + i, trap4(arg));
  }
  for (; i < n; ++i) out[i] = trap1(scale * (x[i] - shift));
}

double relu_shift_sum_k(const double* v, std::size_t n, double shift) {
  const __m256d vh = _mm256_set1_pd(shift);
  __m256d acc = kZero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_add_pd(_mm256_loadu_pd(v + i), vh);
    acc = _mm256_add_pd(acc, _mm256_max_pd(s, kZero));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    double s = v[i] + shift;
    if (s > 0.0) tail += s;
  }
  return hsum(acc) + tail;
}

void psi_row_k(const double* tk, const double* tk1, double* out, std::size_t n,
               double a, double b, double ca, double cb) {
  const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b);
  const __m256d vca = _mm256_set1_pd(ca), vcb = _mm256_set1_pd(cb);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ra = _mm256_max_pd(_mm256_add_pd(_mm256_loadu_pd(tk + i), va), kZero);
    __m256d rb = _mm256_max_pd(_mm256_add_pd(_mm256_loadu_pd(tk1 + i), vb), kZero);
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vcb, rb, _mm256_mul_pd(vca, ra)));
  }
  for (; i < n; ++i) {
    double ra = tk[i] + a;
    double rb = tk1[i] + b;
    ra = ra > 0.0 ? ra : 0.0;
    rb = rb > 0.0 ? rb : 0.0;
    out[i] = ca * ra + cb * rb;
  }
}

double psi_weighted_sum_k(const double* tk, const double* tk1, const double* w,
                          std::size_t n, double a, double b, double ca,
                          double cb) {
  const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b);
  const __m256d vca = _mm256_set1_pd(ca), vcb = _mm256_set1_pd(cb);
  __m256d acc = kZero;
  std::size_t i = 0;
  if (w == nullptr) {
    for (; i + 4 <= n; i += 4) {
      __m256d ra = _mm256_max_pd(_mm256_add_pd(_mm256_loadu_pd(tk + i), va), kZero);
      __m256d rb = _mm256_max_pd(_mm256_add_pd(_mm256_loadu_pd(tk1 + i), vb), kZero);
      acc = _mm256_add_pd(acc, _mm256_fmadd_pd(vcb, rb, _mm256_mul_pd(vca, ra)));
    }
  } else {
    for (; i + 4 <= n; i += 4) {
      __m256d ra = _mm256_max_pd(_mm256_add_pd(_mm256_loadu_pd(tk + i), va), kZero);
      __m256d rb = _mm256_max_pd(_mm256_add_pd(_mm256_loadu_pd(tk1 + i), vb), kZero);
      __m256d v = _mm256_fmadd_pd(vcb, rb, _mm256_mul_pd(vca, ra));
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), v, acc);
    }
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    double ra = tk[i] + a;
    double rb = tk1[i] + b;
    ra = ra > 0.0 ? ra : 0.0;
    rb = rb > 0.0 ? rb : 0.0;
    double v = ca * ra + cb * rb;
    tail += (w == nullptr) ? v : w[i] * v;
  }
  return hsum(acc) + tail;
}

double psi_square_sum_k(const double* tk, const double* tk1, std::size_t n,
                        double a, double b, double ca, double cb) {
  const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b);
  const __m256d vca = _mm256_set1_pd(ca), vcb = _mm256_set1_pd(cb);
  __m256d acc = kZero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ra = _mm256_max_pd(_mm256_add_pd(_mm256_loadu_pd(tk + i), va), kZero);
    __m256d rb = _mm256_max_pd(_mm256_add_pd(_mm256_loadu_pd(tk1 + i), vb), kZero);
    __m256d v = _mm256_fmadd_pd(vcb, rb, _mm256_mul_pd(vca, ra));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    double ra = tk[i] + a;
    double rb = tk1[i] + b;
    ra = ra > 0.0 ? ra : 0.0;
    rb = rb > 0.0 ? rb : 0.0;
    double v = ca * ra + cb * rb;
    tail += v * v;
  }
  return hsum(acc) + tail;
}

double dot_k(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = kZero, acc1 = kZero;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return hsum(_mm256_add_pd(acc0, acc1)) + tail;
}

double sum_k(const double* a, std::size_t n) {
  __m256d acc = kZero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i];
  return hsum(acc) + tail;
}

void axpy_k(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs_diff_k(const double* a, const double* b, std::size_t n) {
  __m256d acc = kZero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(kSign, d));
  }
  double m = (i > 0) ? hmax(acc) : 0.0;
  for (; i < n; ++i) {
    double d = std::fabs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace

const Kernels& avx2_kernels_impl() {
  static const Kernels k = {
      "avx2",            trapezoid_k,      trapezoid_scaled_k,
      relu_shift_sum_k,  psi_row_k,        psi_weighted_sum_k,
      psi_square_sum_k,  dot_k,            sum_k,
      axpy_k,            max_abs_diff_k,
  };
  return k;
}

}  // namespace relwave::simd
