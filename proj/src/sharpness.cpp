#include "hardy/sharpness.hpp"

#include <cmath>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/summation.hpp"
#include "hardy/weights.hpp"

namespace hardy {

LatticeFunction test_function(double beta, std::int64_t n) {
  if (n < 1) throw DomainError("test_function: N must be >= 1");
  const double nd = static_cast<double>(n);
  const double peak = power(nd, beta);
  const double slope = power(nd, beta - 1.0);
  std::vector<double> u(static_cast<std::size_t>(2 * n), 0.0);
  for (std::int64_t k = 1; k < 2 * n; ++k) {
    u[static_cast<std::size_t>(k)] =
        k < n ? power(static_cast<double>(k), beta) : k == n ? peak : 2.0 * peak - slope * static_cast<double>(k);
  }
  return LatticeFunction(std::move(u));
}

bool summable(double alpha, double beta) { return 2.0 * beta + alpha - 2.0 < -1.0; }

SweepRow family_quotient(double alpha, double beta, std::int64_t n) {
  const LatticeFunction u = test_function(beta, n);
  CompensatedSum<> lhs;
  CompensatedSum<> rhs;
  for (std::int64_t k = u.support_end(); k >= 1; --k) {
    const double kd = static_cast<double>(k);
    const double d = u(k) - u(k - 1);
    lhs += d * d * power(kd, alpha);
    const double x = u(k);
    if (x != 0.0) rhs += x * x * power(kd, alpha - 2.0);
  }
  SweepRow row{beta, n, lhs.value(), rhs.value(), 0.0};
  row.quotient = row.lhs / row.rhs;
  return row;
}

std::vector<double> default_beta_grid(double alpha) {
  const double edge = 0.5 * (1.0 - alpha);
  return {edge - 0.1, edge - 0.03, edge - 0.01, edge - 0.003};
}

SharpnessSweepResult sweep(double alpha, std::span<const double> betas, std::span<const std::int64_t> sizes) {
  for (double b : betas) {
    if (!summable(alpha, b)) {
      throw DomainError("sweep: beta = " + std::to_string(b) + " violates 2 beta + alpha - 2 < -1");
    }
  }
  for (std::int64_t n : sizes) {
    if (n < 1) throw DomainError("sweep: N must be >= 1");
  }
  SharpnessSweepResult result;
  result.alpha = alpha;
  result.rows = kernels::sweep_rows(alpha, betas, sizes, kernels::Exec::parallel);
  return result;
}

}  // namespace hardy
