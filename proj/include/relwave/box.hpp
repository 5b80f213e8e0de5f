#pragma once

#include <stdexcept>
#include <vector>

namespace relwave {

// Axis-aligned box in R^d.
struct Box {
  std::vector<double> lo, hi;

  Box() = default;
  Box(std::vector<double> l, std::vector<double> h) : lo(std::move(l)), hi(std::move(h)) {}

  // Cube [-r, r]^d
  static Box centered(int d, double r) {
    return Box(std::vector<double>(d, -r), std::vector<double>(d, r));
  }

  int dim() const { return static_cast<int>(lo.size()); }

  double volume() const {
    double v = 1.0;
    for (int j = 0; j < dim(); ++j) v *= hi[j] - lo[j];
    return v;
  }

  double side(int j) const { return hi[j] - lo[j]; }

  bool contains(const std::vector<double>& x) const {
    for (int j = 0; j < dim(); ++j)
      if (x[j] < lo[j] || x[j] > hi[j]) return false;
    return true;
  }

  // Throws on empty or inverted extents. Degenerate (point) axes are allowed.
  void validate() const {
    if (lo.empty() || lo.size() != hi.size())
      throw std::invalid_argument("box: dimension mismatch or empty");
    for (std::size_t j = 0; j < lo.size(); ++j)
      if (!(lo[j] <= hi[j])) throw std::invalid_argument("box: inverted extent");
  }
};

}  // namespace relwave
