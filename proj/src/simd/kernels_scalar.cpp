#include "relwave/simd/kernels.hpp"

#include <cmath>

namespace relwave::simd {
namespace {

inline double trap1(double x) {
  // max(0, min(2, 3 - |x|)): identical to the four-rect form but with exact
  // zeros outside [-3,3] and an exact plateau value of 2 on [-1,1].
  double v = 3.0 - std::fabs(x);
  if (v > 2.0) v = 2.0;
  return v > 0.0 ? v : 0.0;
}

void trapezoid_k(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = trap1(x[i]);
}

void trapezoid_scaled_k(const double* x, double* out, std::size_t n,
                        double scale, double shift) {
  for (std::size_t i = 0; i < n; ++i) out[i] = trap1(scale * (x[i] - shift));
}

double relu_shift_sum_k(const double* v, std::size_t n, double shift) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = v[i] + shift;
    if (s > 0.0) acc += s;
  }
  return acc;
}

void psi_row_k(const double* tk, const double* tk1, double* out, std::size_t n,
               double a, double b, double ca, double cb) {
  for (std::size_t i = 0; i < n; ++i) {
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
  double acc = 0.0;
  if (w == nullptr) {
    for (std::size_t i = 0; i < n; ++i) {
      double ra = tk[i] + a;
      double rb = tk1[i] + b;
      ra = ra > 0.0 ? ra : 0.0;
      rb = rb > 0.0 ? rb : 0.0;
      acc += ca * ra + cb * rb;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      double ra = tk[i] + a;
      double rb = tk1[i] + b;
      ra = ra > 0.0 ? ra : 0.0;
      rb = rb > 0.0 ? rb : 0.0;
      acc += w[i] * (ca * ra + cb * rb);
    }
  }
  return acc;
}

double psi_square_sum_k(const double* tk, const double* tk1, std::size_t n,
                        double a, double b, double ca, double cb) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ra = tk[i] + a;
    double rb = tk1[i] + b;
    ra = ra > 0.0 ? ra : 0.0;
    rb = rb > 0.0 ? rb : 0.0;
    double v = ca * ra + cb * rb;
    acc += v * v;
  }
  return acc;
}

double dot_k(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_k(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

void axpy_k(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs_diff_k(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = std::fabs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {
      "scalar",          trapezoid_k,      trapezoid_scaled_k,
      relu_shift_sum_k,  psi_row_k,        psi_weighted_sum_k,
      psi_square_sum_k,  dot_k,            sum_k,
      axpy_k,            max_abs_diff_k,
  };
  return k;
}

}  // namespace relwave::simd
