#pragma once

// Data-parallel grid loops. Every kernel has a serial reference path and an
// OpenMP path; both compute each grid point with identical arithmetic, so
// their outputs agree bit for bit regardless of thread count.

#include <cstdint>
#include <span>
#include <vector>

#include "hardy/analysis.hpp"
#include "hardy/sharpness.hpp"
#include "hardy/spectral.hpp"
#include "hardy/supersolution.hpp"
#include "hardy/weights_params.hpp"

namespace hardy::kernels {

enum class Exec { serial, parallel };

/// Sets the OpenMP team size for subsequent parallel kernels (<= 0: hardware default).
void set_threads(int threads);
int max_threads();

/// w(1), ..., w(n_max).
std::vector<double> weight_table(const WeightParams& p, std::int64_t n_max, Exec exec);

struct BoundScan {
  double alpha = 0.0;
  double min_scaled_margin = 0.0;  // min_n lower_bound_margin / margin_scale
  std::int64_t argmin_n = 0;       // smallest n attaining the minimum
};

/// Pointwise bound w(n) >= c n^(alpha-2) over 1 <= n <= n_max.
BoundScan lower_bound_scan(const WeightParams& p, double c, std::int64_t n_max, Exec exec);

std::vector<double> remainder_grid(double alpha, std::span<const double> xs, Exec exec);

std::vector<SectionEstimate> section_minima(double alpha, std::span<const std::int64_t> sizes, double tol,
                                            Exec exec);

/// Rows ordered by N, then by the given beta order.
std::vector<SweepRow> sweep_rows(double alpha, std::span<const double> betas,
                                 std::span<const std::int64_t> sizes, Exec exec);

std::vector<ConjectureFinding> first_negative_coefficients(std::span<const double> alphas, std::int64_t k_max,
                                                           Exec exec);

/// Random u for trial `trial` of a run seeded with `seed`: support length
/// uniform in [1, support_max], u(1..L) i.i.d. uniform in [-1, 1), u(0) = 0.
LatticeFunction random_lattice_function(std::uint64_t seed, std::int64_t trial, std::int64_t support_max);

struct TrialOutcome {
  std::int64_t trial = 0;
  std::int64_t support = 0;  // last n with u(n) != 0
  InequalityCheck check;
};

/// verify_inequality for the power triplet of p on random_lattice_function
/// draws 0 .. trials-1. Handle values are tabulated once for n <= support_max + 1.
std::vector<TrialOutcome> random_trials(const WeightParams& p, std::int64_t trials, std::int64_t support_max,
                                        std::uint64_t seed, Exec exec);

}  // namespace hardy::kernels
