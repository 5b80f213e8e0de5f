#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relwave/box.hpp"
#include "relwave/quadrature.hpp"

namespace relwave {

// Scale limits accepted by configs and lattice enumeration.
inline constexpr int kScaleMin = -8;
inline constexpr int kScaleMax = 16;

// Intrinsic dimension plus the normalization constant that makes the scaling
// function integrate to one.
struct FrameParams {
  int d = 1;
  double c_d = 0.125;

  static FrameParams make(int d);
};

// Frame element identifier: scale k and offset b on the scale-k lattice
// b in 2^(-k/d) Z^d. Offsets are stored as integers so the lattice invariant
// holds by construction.
struct WaveletIndex {
  int k = 0;
  std::vector<std::int64_t> offsets;

  int dim() const { return static_cast<int>(offsets.size()); }
  double spacing(int d) const { return std::exp2(-double(k) / double(d)); }
  Eigen::VectorXd b(int d) const;

  // Recovers integer offsets from a real offset vector; throws if any
  // component is farther than 1e-12 (relative) from the lattice.
  static WaveletIndex from_b(int k, const Eigen::VectorXd& b, int d);

  bool operator==(const WaveletIndex& o) const {
    return k == o.k && offsets == o.offsets;
  }
  // Lowest scale first, then lexicographic offsets (the argmax tie order).
  bool operator<(const WaveletIndex& o) const {
    if (k != o.k) return k < o.k;
    return offsets < o.offsets;
  }
};

struct AmbientExtensionParams {
  int m = 2;   // ambient dimension
  int d = 1;   // intrinsic dimension
  double r1 = 0.0;  // inner plateau radius
  double r2 = 0.0;  // outer support radius

  void validate() const;
  double plateau_halfwidth() const;  // r1 / sqrt(m - d)
  double support_halfwidth() const;  // r2 / sqrt(m - d)
};

// --- Scalar building blocks ---------------------------------------------

inline double rect(double x) { return x > 0.0 ? x : 0.0; }

// Height-2 trapezoid: 0 outside [-3,3], 2 on [-1,1], unit-slope ramps.
double trapezoid(double x);

// Height-2 trapezoid with plateau [-a, a] and support [-s, s].
double trapezoid_plateau(double x, double a, double s);

// --- Frame evaluation ------------------------------------------------------

// phi(x) = C_d * rect(sum_j t(x_j) - 2(d-1))
double scaling_phi(const Eigen::VectorXd& x, const FrameParams& params);

// psi(x) = phi(x) - phi(2^(-1/d) x) / 2
double mother_psi(const Eigen::VectorXd& x, const FrameParams& params);

// psi_{k,b}(x) = 2^(k/2) psi(2^(k/d)(x - b))
double psi_kb(const Eigen::VectorXd& x, const WaveletIndex& idx,
              const FrameParams& params);

// S_k(x,b) = 2^k phi(2^(k/d)(x - b))
double s_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& b, int k,
                const FrameParams& params);

// Extension of psi_{k,b} to chart-local R^m coordinates (first d tangent,
// last m-d normal). Constant across the normal plateau, zero outside the
// normal support.
double ambient_psi(const Eigen::VectorXd& x_local, const WaveletIndex& idx,
                   const AmbientExtensionParams& ext, const FrameParams& params);

// Per-axis halfwidth of supp(psi_{k,b}) around b: 3 * 2^(-(k-1)/d).
double psi_support_halfwidth(int k, int d);

// All lattice offsets whose wavelet support box intersects the given box
// (closed intersection), in lexicographic order.
std::vector<WaveletIndex> lattice_offsets(int k, const Box& box,
                                          const FrameParams& params);

// --- Normalization ------------------------------------------------------

// integral over [-3,3]^d of rect(sum_j t(x_j) - 2(d-1)), refined until
// successive Richardson estimates differ by < rel_tol relative.
double phi_raw_integral(int d, double rel_tol = 1e-9);

// C_d = 1 / phi_raw_integral(d); cached. Supported d: 1..4.
double normalization_constant(int d);

// Fixture file: JSON map {d: C_d as decimal string}.
std::map<int, double> load_cd_fixture(const std::string& path);
void write_cd_fixture(const std::string& path, const std::map<int, double>& values);

// --- Numerical property checks ------------------------------------------

struct MomentResult {
  double m0 = 0.0;        // integral of the function
  Eigen::VectorXd m1;     // integral of x * function, one entry per axis
  bool converged = false;
};

// Quadrature of psi_{k,b} and x*psi_{k,b} over the support box.
MomentResult moment_check(const WaveletIndex& idx, const FrameParams& params,
                          double rel_tol = 1e-8);

// Same integrals for the scaling function itself (m0 should be 1).
MomentResult scaling_moments(const FrameParams& params, double rel_tol = 1e-8);

// L2 norm of the mother wavelet; by change of variables every psi_{k,b}
// has the same L2 norm.
double psi_l2_norm(const FrameParams& params, double rel_tol = 1e-9);

// Max of |psi_{k,b}| over a dense tensor grid on its support.
double psi_sup_on_grid(const WaveletIndex& idx, const FrameParams& params,
                       int pts_per_axis);

// Largest number of scale-k wavelets whose open support contains any of
// `samples` random points (brute-force count).
int max_support_count(int d, int k, int samples, std::uint64_t seed);

struct DecayCheckResult {
  double fitted_c = 0.0;   // constant fitted on the coarse grid
  double worst_ratio = 0.0;  // max of S_k / bound over the dense grid
  bool pass = false;
};

// Size condition: S_k(x,0) <= C 2^(-k) / (2^(-k) + rho(x,0))^2 with
// rho(x,0) the volume of the smallest ball containing x and 0. C is fitted
// once on a coarse (k, x) grid, then the bound is verified on a denser one.
DecayCheckResult decay_check(int d);

}  // namespace relwave
