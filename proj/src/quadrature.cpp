#include "relwave/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "relwave/rng.hpp"
#include "relwave/simd/kernels.hpp"

namespace relwave {

double RombergLadder::add(double raw) {
  std::vector<double> row;
  row.reserve(prev_row_.size() + 1);
  row.push_back(raw);
  // Eliminate error terms h^2, h^3, h^4, ... column by column.
  for (std::size_t s = 0; s < prev_row_.size(); ++s) {
    double denom = std::exp2(double(s + 2)) - 1.0;
    double v = row[s] + (row[s] - prev_row_[s]) / denom;
    row.push_back(v);
  }
  double current = row.back();
  if (!diag_.empty()) {
    last_delta_ = std::fabs(current - diag_.back());
    double tol = std::max(abs_tol_, rel_tol_ * std::fabs(current));
    if (last_delta_ <= tol) converged_ = true;
  }
  diag_.push_back(current);
  best_ = current;
  prev_row_ = std::move(row);
  return current;
}

namespace {

int round_up_multiple(int n, int m) { return ((n + m - 1) / m) * m; }

double midpoint_level(const Box& box, const RowIntegrand& f, int cells) {
  const int d = box.dim();
  const std::size_t n = static_cast<std::size_t>(cells);
  std::vector<std::vector<double>> axes(d);
  for (int j = 0; j < d; ++j) {
    axes[j].resize(n);
    double h = box.side(j) / double(cells);
    for (std::size_t i = 0; i < n; ++i) axes[j][i] = box.lo[j] + (double(i) + 0.5) * h;
  }
  std::vector<double> vals(n);
  double total = 0.0;
  if (d == 1) {
    f(nullptr, axes[0].data(), n, vals.data());
    total = simd::kernels().sum(vals.data(), n);
  } else {
    std::vector<double> prefix(d - 1);
    std::vector<std::size_t> idx(d - 1, 0);
    bool done = false;
    while (!done) {
      for (int j = 0; j < d - 1; ++j) prefix[j] = axes[j][idx[j]];
      f(prefix.data(), axes[d - 1].data(), n, vals.data());
      total += simd::kernels().sum(vals.data(), n);
      int j = d - 2;
      while (j >= 0) {
        if (++idx[j] < n) break;
        idx[j] = 0;
        --j;
      }
      if (j < 0) done = true;
    }
  }
  double cell_volume = box.volume() / std::pow(double(cells), d);
  return total * cell_volume;
}

}  // namespace

QuadratureResult integrate_rows(const Box& box, const RowIntegrand& f,
                                const QuadratureOptions& opt) {
  box.validate();
  QuadratureResult res;
  if (box.volume() == 0.0) {
    res.converged = true;
    return res;
  }
  RombergLadder ladder(opt.rel_tol, opt.abs_tol);
  int cells = round_up_multiple(std::max(opt.initial_cells, 12), 12);
  for (int level = 0; level < opt.max_levels; ++level) {
    ladder.add(midpoint_level(box, f, cells));
    if (ladder.converged()) break;
    cells *= 2;
  }
  res.value = ladder.best();
  res.last_delta = ladder.last_delta();
  res.levels = ladder.levels();
  res.converged = ladder.converged();
  return res;
}

QuadratureResult integrate(const Box& box,
                           const std::function<double(const std::vector<double>&)>& f,
                           const QuadratureOptions& opt) {
  const int d = box.dim();
  std::vector<double> pt(d);
  RowIntegrand rows = [&](const double* prefix, const double* z, std::size_t n,
                          double* vals) {
    for (int j = 0; j < d - 1; ++j) pt[j] = prefix[j];
    for (std::size_t i = 0; i < n; ++i) {
      pt[d - 1] = z[i];
      vals[i] = f(pt);
    }
  };
  return integrate_rows(box, rows, opt);
}

McResult mc_integrate(const Box& box,
                      const std::function<double(const std::vector<double>&)>& f,
                      std::size_t samples, std::uint64_t seed) {
  box.validate();
  const int d = box.dim();
  Rng rng(seed);
  std::vector<double> pt(d);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    for (int j = 0; j < d; ++j) pt[j] = rng.uniform(box.lo[j], box.hi[j]);
    double v = f(pt);
    sum += v;
    sum_sq += v * v;
  }
  double n = double(samples);
  double mean = sum / n;
  double var = std::max(0.0, sum_sq / n - mean * mean);
  McResult res;
  res.value = mean * box.volume();
  res.std_error = box.volume() * std::sqrt(var / n);
  return res;
}

}  // namespace relwave
