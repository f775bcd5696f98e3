#pragma once

#include <cstddef>
#include <stdexcept>

namespace rsir {

/// Uniform 1D mesh of n_cells cells on [x_min, x_max].
struct Mesh1D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_cells = 100;

  double dx() const { return (x_max - x_min) / static_cast<double>(n_cells); }
  double center(std::size_t i) const { return x_min + (static_cast<double>(i) + 0.5) * dx(); }

  void validate() const {
    if (!(x_max > x_min)) throw std::invalid_argument("mesh requires x_max > x_min");
    if (n_cells < 4) throw std::invalid_argument("mesh requires at least 4 cells");
  }
};

}  // namespace rsir
