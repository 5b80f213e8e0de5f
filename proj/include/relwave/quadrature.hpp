#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "relwave/box.hpp"

namespace relwave {

// Richardson ladder over successive grid halvings of the composite midpoint
// rule. The integrands here are piecewise smooth with hinge sets, so the
// error expansion carries h^2, h^3, h^4, ... terms; the ladder eliminates
// them in that order.
class RombergLadder {
 public:
  explicit RombergLadder(double rel_tol = 1e-9, double abs_tol = 0.0)
      : rel_tol_(rel_tol), abs_tol_(abs_tol) {}

  // Feed the raw midpoint estimate for the next level (cell count doubled
  // per axis each time). Returns the current extrapolated value.
  double add(double raw);

  bool converged() const { return converged_; }
  double best() const { return best_; }
  double last_delta() const { return last_delta_; }
  int levels() const { return static_cast<int>(diag_.size()); }

 private:
  double rel_tol_, abs_tol_;
  std::vector<double> prev_row_;
  std::vector<double> diag_;
  double best_ = 0.0;
  double last_delta_ = 0.0;
  bool converged_ = false;
};

struct QuadratureOptions {
  int initial_cells = 24;  // per axis; rounded up to a multiple of 12
  int max_levels = 6;
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double last_delta = 0.0;
  int levels = 0;
  bool converged = false;
};

// Fill vals[j] = f(prefix[0..d-2], z[j]) for j < n. The z array is the inner
// (last) axis of the tensor midpoint grid; prefix holds the outer coordinates.
using RowIntegrand = std::function<void(const double* prefix, const double* z,
                                        std::size_t n, double* vals)>;

QuadratureResult integrate_rows(const Box& box, const RowIntegrand& f,
                                const QuadratureOptions& opt = {});

// Pointwise convenience wrapper around integrate_rows.
QuadratureResult integrate(const Box& box,
                           const std::function<double(const std::vector<double>&)>& f,
                           const QuadratureOptions& opt = {});

struct McResult {
  double value = 0.0;
  double std_error = 0.0;
};

// Plain Monte Carlo with a fixed-seed deterministic stream.
McResult mc_integrate(const Box& box,
                      const std::function<double(const std::vector<double>&)>& f,
                      std::size_t samples, std::uint64_t seed);

}  // namespace relwave
