#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardy/supersolution.hpp"

namespace hardy {

/// u(n) = n^beta on [1, N], linear from N^beta at n = N down to 0 at n = 2N,
/// zero at n = 0 and n >= 2N.
LatticeFunction test_function(double beta, std::int64_t n);

struct SweepRow {
  double beta;
  std::int64_t n;
  double lhs;
  double rhs;
  double quotient;
};

struct SharpnessSweepResult {
  double alpha = 0.0;
  std::vector<SweepRow> rows;  // ordered by N, then beta as given
};

/// 2 beta + alpha - 2 < -1: the tail sum_n n^(2 beta + alpha - 2) converges.
bool summable(double alpha, double beta);

/// lhs_form(u, alpha) / sum_n u(n)^2 n^(alpha-2) for u = test_function(beta, N).
/// Both sums are accumulated from the largest n downward.
SweepRow family_quotient(double alpha, double beta, std::int64_t n);

/// (1 - alpha)/2 - {0.1, 0.03, 0.01, 0.003}.
std::vector<double> default_beta_grid(double alpha);

/// Rejects any beta that is not summable.
SharpnessSweepResult sweep(double alpha, std::span<const double> betas, std::span<const std::int64_t> sizes);

}  // namespace hardy
