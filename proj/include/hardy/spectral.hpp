#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hardy {

inline constexpr double kDefaultSpectralTol = 1e-10;

/// Finite section of the weighted Hardy quadratic forms on sequences
/// supported in {1..N}:
///   stiffness A (tridiagonal): a_n = n^a + (n+1)^a, c_n = -(n+1)^a,
///   mass B (diagonal):         m_n = n^(a-2).
/// u^T A u equals lhs_form(u, a) for such u.
struct TridiagonalPencil {
  double alpha = 0.0;
  std::int64_t size = 0;
  std::vector<double> stiff_diag;
  std::vector<double> stiff_off;
  std::vector<double> mass_diag;
};

TridiagonalPencil build_pencil(double alpha, std::int64_t n);

/// Number of eigenvalues of A u = lambda B u strictly below lambda, from the
/// negative pivots of the LDL^T factorization of A - lambda B.
std::int64_t count_below(const TridiagonalPencil& p, double lambda);

/// Smallest generalized eigenvalue by inertia bisection on
/// [0, min_n a_n/m_n]; stops once the bracket is narrower than
/// tol (1 + |lambda|).
double min_eigenvalue(const TridiagonalPencil& p, double tol = kDefaultSpectralTol);

/// u^T A u and u^T B u for u given on {1..N} (u[0] is u(1)).
double stiffness_form(const TridiagonalPencil& p, std::span<const double> u);
double mass_form(const TridiagonalPencil& p, std::span<const double> u);

struct SectionEstimate {
  std::int64_t n;
  double lambda_min;
};

std::vector<std::int64_t> default_section_schedule();

/// lambda_min for each section size; requires a strictly increasing schedule.
std::vector<SectionEstimate> sharp_constant_estimate(double alpha, std::span<const std::int64_t> schedule,
                                                     double tol = kDefaultSpectralTol);

}  // namespace hardy
