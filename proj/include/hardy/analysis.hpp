#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hardy/numerics.hpp"

namespace hardy {

struct SignChange {
  double x_left;
  double x_right;
};

struct ScanReport {
  double alpha = 0.0;
  double x_max = 0.0;
  std::int64_t points = 0;   // grid x_i = i * x_max / points, i = 1..points
  double min_margin = 0.0;
  double argmin_x = 0.0;
  std::vector<SignChange> sign_changes;
  std::vector<double> xs;
  std::vector<double> margins;
};

/// E(x) = g(x) - ((alpha-1)^2/4) x^2 with beta = (1-alpha)/2. Defined on
/// (0, 1]; x = 1 uses the closed value 1 + 2^alpha - 0^beta - 2^(alpha+beta).
double remainder(double alpha, double x);

/// Evaluates E on a uniform grid of `points` values in (0, x_max].
ScanReport remainder_scan(double alpha, double x_max, std::int64_t points);

/// Sign changes of a sampled function; zeros inherit the previous nonzero sign.
std::vector<SignChange> find_sign_changes(std::span<const double> xs, std::span<const double> values);

/// 1 + 2^alpha - 2^((1+alpha)/2) - (alpha-1)^2/4.
double boundary_weight_margin(double alpha);

/// b_k(alpha) and sign classes for 2 <= k <= k_max.
CoefficientTable coefficient_signs(double alpha, std::int64_t k_max);

struct ConjectureFinding {
  double alpha;
  std::optional<std::int64_t> first_negative_k;
  double value;  // b at first_negative_k, or 0
};

/// Smallest k in [3, k_max] with b_k(alpha) classified negative, per alpha.
std::vector<ConjectureFinding> conjecture_scan(std::span<const double> alphas, std::int64_t k_max);

}  // namespace hardy
