#include "hardy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/summation.hpp"
#include "hardy/weights.hpp"

namespace hardy {

namespace {

// Pencil rescaled by D = diag(a_n^{-1/2}): unit stiffness diagonal,
// off-diagonal c_n / sqrt(a_n a_{n+1}), mass m_n / a_n. Same inertia as A - lambda B.
struct ScaledPencil {
  std::vector<double> off_sq;
  std::vector<double> mass;
  double pivot_guard = 0.0;
};

ScaledPencil scale(const TridiagonalPencil& p) {
  const auto n = static_cast<std::size_t>(p.size);
  ScaledPencil s;
  s.mass.resize(n);
  s.off_sq.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) s.mass[i] = p.mass_diag[i] / p.stiff_diag[i];
  double max_off = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double c = p.stiff_off[i] / std::sqrt(p.stiff_diag[i] * p.stiff_diag[i + 1]);
    s.off_sq[i] = c * c;
    max_off = std::max(max_off, s.off_sq[i]);
  }
  s.pivot_guard = std::numeric_limits<double>::min() * max_off;
  return s;
}

std::int64_t count_scaled(const ScaledPencil& s, double lambda) {
  std::int64_t negatives = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < s.mass.size(); ++i) {
    d = (1.0 - lambda * s.mass[i]) - (i > 0 ? s.off_sq[i - 1] / d : 0.0);
    if (std::abs(d) < s.pivot_guard) d = d > 0.0 ? s.pivot_guard : -s.pivot_guard;
    if (d < 0.0) ++negatives;
  }
  return negatives;
}

}  // namespace

TridiagonalPencil build_pencil(double alpha, std::int64_t n) {
  if (n <= 0) throw DomainError("build_pencil: N must be >= 1");
  TridiagonalPencil p;
  p.alpha = alpha;
  p.size = n;
  const auto size = static_cast<std::size_t>(n);
  p.stiff_diag.resize(size);
  p.stiff_off.resize(size - 1);
  p.mass_diag.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double k = static_cast<double>(i + 1);
    const double next = power(k + 1.0, alpha);
    p.stiff_diag[i] = power(k, alpha) + next;
    if (i + 1 < size) p.stiff_off[i] = -next;
    p.mass_diag[i] = power(k, alpha - 2.0);
  }
  return p;
}

std::int64_t count_below(const TridiagonalPencil& p, double lambda) { return count_scaled(scale(p), lambda); }

double min_eigenvalue(const TridiagonalPencil& p, double tol) {
  if (!(tol > 0.0)) throw DomainError("min_eigenvalue: tol must be positive");
  if (p.size <= 0) throw DomainError("min_eigenvalue: empty pencil");
  for (std::size_t i = 0; i < p.mass_diag.size(); ++i) {
    if (!(p.mass_diag[i] > 0.0) || !std::isfinite(p.mass_diag[i]) || !(p.stiff_diag[i] > 0.0) ||
        !std::isfinite(p.stiff_diag[i])) {
      throw BracketFailure("min_eigenvalue: non-positive or non-finite entry at n=" + std::to_string(i + 1));
    }
  }
  const ScaledPencil s = scale(p);

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.mass.size(); ++i) hi = std::min(hi, 1.0 / s.mass[i]);
  if (count_scaled(s, lo) != 0) {
    throw BracketFailure("min_eigenvalue: negative pivots at lambda = 0 (stiffness not PSD?)");
  }
  // The Rayleigh quotient of a unit vector can equal lambda_min exactly (N = 1).
  if (count_scaled(s, hi) == 0) {
    const double widened = hi * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()) + tol;
    if (count_scaled(s, widened) == 0) {
      throw BracketFailure("min_eigenvalue: no eigenvalue below the Rayleigh bound");
    }
    hi = widened;
  }
  while (hi - lo >= tol * (1.0 + std::abs(0.5 * (lo + hi)))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_scaled(s, mid) == 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double stiffness_form(const TridiagonalPencil& p, std::span<const double> u) {
  CompensatedSum<> s;
  const auto n = static_cast<std::size_t>(p.size);
  for (std::size_t i = 0; i < n; ++i) {
    s += p.stiff_diag[i] * u[i] * u[i];
    if (i + 1 < n) s += 2.0 * p.stiff_off[i] * u[i] * u[i + 1];
  }
  return s.value();
}

double mass_form(const TridiagonalPencil& p, std::span<const double> u) {
  CompensatedSum<> s;
  for (std::size_t i = 0; i < static_cast<std::size_t>(p.size); ++i) s += p.mass_diag[i] * u[i] * u[i];
  return s.value();
}

std::vector<std::int64_t> default_section_schedule() { return {100, 1000, 10000, 100000}; }

std::vector<SectionEstimate> sharp_constant_estimate(double alpha, std::span<const std::int64_t> schedule,
                                                     double tol) {
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) {
      throw DomainError("sharp_constant_estimate: schedule must be strictly increasing");
    }
  }
  return kernels::section_minima(alpha, schedule, tol, kernels::Exec::parallel);
}

}  // namespace hardy
