#include "hardy/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/weights.hpp"

namespace hardy::kernels {

namespace {

bool parallel(Exec exec) { return exec == Exec::parallel; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [lo, hi] by rejection.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<std::int64_t>(draw % span);
}

}  // namespace

void set_threads(int threads) { omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs()); }

int max_threads() { return omp_get_max_threads(); }

std::vector<double> weight_table(const WeightParams& p, std::int64_t n_max, Exec exec) {
  if (n_max < 1) throw DomainError("weight_table: n_max must be >= 1");
  std::vector<double> w(static_cast<std::size_t>(n_max));
#pragma omp parallel for schedule(static) if (parallel(exec))
  for (std::int64_t n = 1; n <= n_max; ++n) w[static_cast<std::size_t>(n - 1)] = weight_w(p, n);
  return w;
}

BoundScan lower_bound_scan(const WeightParams& p, double c, std::int64_t n_max, Exec exec) {
  if (n_max < 1) throw DomainError("lower_bound_scan: n_max must be >= 1");
  BoundScan best{p.alpha, std::numeric_limits<double>::infinity(), 0};
#pragma omp parallel if (parallel(exec))
  {
    BoundScan local{p.alpha, std::numeric_limits<double>::infinity(), 0};
#pragma omp for schedule(static) nowait
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const double scaled = lower_bound_margin(p, c, n) / margin_scale(p, c, n);
      if (scaled < local.min_scaled_margin) {
        local.min_scaled_margin = scaled;
        local.argmin_n = n;
      }
    }
#pragma omp critical(hardy_bound_scan)
    {
      if (local.min_scaled_margin < best.min_scaled_margin ||
          (local.min_scaled_margin == best.min_scaled_margin && local.argmin_n < best.argmin_n)) {
        best = local;
      }
    }
  }
  return best;
}

std::vector<double> remainder_grid(double alpha, std::span<const double> xs, Exec exec) {
  std::vector<double> out(xs.size());
  const auto count = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static) if (parallel(exec))
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = remainder(alpha, xs[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<SectionEstimate> section_minima(double alpha, std::span<const std::int64_t> sizes, double tol,
                                            Exec exec) {
  std::vector<SectionEstimate> out(sizes.size());
  const auto count = static_cast<std::int64_t>(sizes.size());
  // Exceptions may not cross the parallel region; collect and rethrow.
  std::vector<std::exception_ptr> errors(sizes.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel(exec))
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = {sizes[k], min_eigenvalue(build_pencil(alpha, sizes[k]), tol)};
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<SweepRow> sweep_rows(double alpha, std::span<const double> betas,
                                 std::span<const std::int64_t> sizes, Exec exec) {
  const auto nb = static_cast<std::int64_t>(betas.size());
  const auto total = nb * static_cast<std::int64_t>(sizes.size());
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 1) if (parallel(exec))
  for (std::int64_t i = 0; i < total; ++i) {
    const auto n = sizes[static_cast<std::size_t>(i / nb)];
    const auto beta = betas[static_cast<std::size_t>(i % nb)];
    rows[static_cast<std::size_t>(i)] = family_quotient(alpha, beta, n);
  }
  return rows;
}

std::vector<ConjectureFinding> first_negative_coefficients(std::span<const double> alphas, std::int64_t k_max,
                                                           Exec exec) {
  std::vector<ConjectureFinding> out(alphas.size());
  const auto count = static_cast<std::int64_t>(alphas.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel(exec))
  for (std::int64_t i = 0; i < count; ++i) {
    const double alpha = alphas[static_cast<std::size_t>(i)];
    const WeightParams p = WeightParams::hardy_optimal(alpha);
    ConjectureFinding f{alpha, std::nullopt, 0.0};
    for (std::int64_t k = 3; k <= k_max; ++k) {
      const double b = taylor_coefficient(p, k);
      if (classify_sign(b, taylor_coefficient_scale(p, k)) == SignClass::negative) {
        f.first_negative_k = k;
        f.value = b;
        break;
      }
    }
    out[static_cast<std::size_t>(i)] = f;
  }
  return out;
}

LatticeFunction random_lattice_function(std::uint64_t seed, std::int64_t trial, std::int64_t support_max) {
  if (support_max < 1) throw DomainError("random_lattice_function: support_max must be >= 1");
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
  const std::int64_t len = uniform_int(rng, 1, support_max);
  std::vector<double> u(static_cast<std::size_t>(len + 1), 0.0);
  for (std::int64_t n = 1; n <= len; ++n) u[static_cast<std::size_t>(n)] = 2.0 * unit_real(rng) - 1.0;
  return LatticeFunction(std::move(u));
}

std::vector<TrialOutcome> random_trials(const WeightParams& p, std::int64_t trials, std::int64_t support_max,
                                        std::uint64_t seed, Exec exec) {
  if (trials < 0) throw DomainError("random_trials: trials must be >= 0");
  if (support_max < 1) throw DomainError("random_trials: support_max must be >= 1");
  std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
  if (trials == 0) return out;

  const std::int64_t top = support_max + 1;
  std::vector<double> v(static_cast<std::size_t>(top + 1), 0.0);
  std::vector<double> phi(static_cast<std::size_t>(top + 1), 0.0);
  const std::vector<double> w_tail = weight_table(p, top, exec);
  std::vector<double> w(static_cast<std::size_t>(top + 1), 0.0);
  for (std::int64_t n = 1; n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    v[i] = power(static_cast<double>(n), p.alpha);
    phi[i] = power(static_cast<double>(n), p.beta);
    w[i] = w_tail[i - 1];
  }
  const SupersolutionTriplet<double> tabulated{
      [&v](std::int64_t n) { return v[static_cast<std::size_t>(n)]; },
      [&phi](std::int64_t n) { return phi[static_cast<std::size_t>(n)]; },
      [&w](std::int64_t n) { return w[static_cast<std::size_t>(n)]; }};

#pragma omp parallel for schedule(dynamic, 16) if (parallel(exec))
  for (std::int64_t t = 0; t < trials; ++t) {
    const LatticeFunction u = random_lattice_function(seed, t, support_max);
    out[static_cast<std::size_t>(t)] = {t, std::max<std::int64_t>(u.support_end() - 1, 0),
                                         verify_inequality(tabulated, u)};
  }
  return out;
}

}  // namespace hardy::kernels
