#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace augpath {

// Ordinary least squares y ~ intercept + slope * x.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;  // 1 - SS_res / SS_tot (centered)
  std::vector<double> residuals;
  std::size_t points = 0;
};

// Throws InsufficientData with fewer than two points or constant x.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace augpath
