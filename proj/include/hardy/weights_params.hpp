#pragma once

namespace hardy {

/// (alpha, beta): alpha is the power-weight exponent, beta the exponent of
/// the power supersolution n^beta.
struct WeightParams {
  double alpha = 0.0;
  double beta = 0.0;

  WeightParams() = default;
  WeightParams(double a, double b);

  /// beta = (1 - alpha)/2, the choice that maximizes the x^2 coefficient of g.
  static WeightParams hardy_optimal(double alpha);

  /// (alpha - 1)^2 / 4.
  double hardy_constant() const;
};

}  // namespace hardy
