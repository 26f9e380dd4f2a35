#include "hardy/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/summation.hpp"

namespace hardy {

double remainder(double alpha, double x) {
  const WeightParams p = WeightParams::hardy_optimal(alpha);
  const double c = p.hardy_constant();
  if (x == 1.0) {
    if (p.beta < 0.0) return -std::numeric_limits<double>::infinity();
    CompensatedSum<> s(1.0);
    s += std::exp2(p.alpha);
    s -= p.beta == 0.0 ? 1.0 : 0.0;
    s -= std::exp2(p.alpha + p.beta);
    s -= c;
    return s.value();
  }
  return g_value(p, x) - c * x * x;
}

std::vector<SignChange> find_sign_changes(std::span<const double> xs, std::span<const double> values) {
  std::vector<SignChange> out;
  int prev_sign = 0;
  double prev_x = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int s = values[i] > 0.0 ? 1 : (values[i] < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) out.push_back({prev_x, xs[i]});
    prev_sign = s;
    prev_x = xs[i];
  }
  return out;
}

ScanReport remainder_scan(double alpha, double x_max, std::int64_t points) {
  if (!(x_max > 0.0 && x_max <= 1.0)) throw DomainError("remainder_scan: x_max must lie in (0, 1]");
  if (points < 1) throw DomainError("remainder_scan: points must be >= 1");
  ScanReport r;
  r.alpha = alpha;
  r.x_max = x_max;
  r.points = points;
  r.xs.resize(static_cast<std::size_t>(points));
  for (std::int64_t i = 1; i <= points; ++i) {
    r.xs[static_cast<std::size_t>(i - 1)] =
        i == points ? x_max : x_max * static_cast<double>(i) / static_cast<double>(points);
  }
  r.margins = kernels::remainder_grid(alpha, r.xs, kernels::Exec::parallel);
  r.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.margins.size(); ++i) {
    if (r.margins[i] < r.min_margin) {
      r.min_margin = r.margins[i];
      r.argmin_x = r.xs[i];
    }
  }
  r.sign_changes = find_sign_changes(r.xs, r.margins);
  return r;
}

double boundary_weight_margin(double alpha) {
  CompensatedSum<> s(1.0);
  s += std::exp2(alpha);
  s -= std::exp2(0.5 * (1.0 + alpha));
  s -= 0.25 * (alpha - 1.0) * (alpha - 1.0);
  return s.value();
}

CoefficientTable coefficient_signs(double alpha, std::int64_t k_max) {
  if (k_max < 2) throw DomainError("coefficient_signs: k_max must be >= 2");
  const WeightParams p = WeightParams::hardy_optimal(alpha);
  CoefficientTable t;
  t.alpha = alpha;
  t.k_min = 2;
  t.entries.reserve(static_cast<std::size_t>(k_max - 1));
  for (std::int64_t k = 2; k <= k_max; ++k) {
    const double value = taylor_coefficient(p, k);
    t.entries.push_back({k, value, classify_sign(value, taylor_coefficient_scale(p, k))});
  }
  return t;
}

std::vector<ConjectureFinding> conjecture_scan(std::span<const double> alphas, std::int64_t k_max) {
  if (k_max < 3) throw DomainError("conjecture_scan: k_max must be >= 3");
  return kernels::first_negative_coefficients(alphas, k_max, kernels::Exec::parallel);
}

}  // namespace hardy
