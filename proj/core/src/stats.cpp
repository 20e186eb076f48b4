#include "augpath/stats.hpp"

#include <Eigen/Dense>

#include "augpath/error.hpp"

namespace augpath {

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::InvalidParams, "x and y differ in length");
  const auto n = static_cast<Eigen::Index>(x.size());
  if (n < 2) throw Error(ErrorCode::InsufficientData, "need at least two points");
  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, 0) = 1.0;
    a(i, 1) = x[i];
    b(i) = y[i];
  }
  const double mean_x = a.col(1).mean();
  if ((a.col(1).array() - mean_x).abs().maxCoeff() == 0.0)
    throw Error(ErrorCode::InsufficientData, "x is constant");
  const Eigen::Vector2d coef = a.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd res = b - a * coef;
  const double ss_res = res.squaredNorm();
  const double ss_tot = (b.array() - b.mean()).square().sum();

  LinearFit fit;
  fit.intercept = coef(0);
  fit.slope = coef(1);
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  fit.residuals.assign(res.data(), res.data() + n);
  fit.points = static_cast<std::size_t>(n);
  return fit;
}

}  // namespace augpath
