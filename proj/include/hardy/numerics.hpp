#pragma once

#include <cstdint>
#include <vector>

#include "hardy/weights_params.hpp"

namespace hardy {

/// Below or at this x, g is summed from its Taylor series; above it the
/// direct power formula is used. The series converges geometrically for
/// x <= 1/2 and does not suffer the O(1) -> O(x^2) cancellation.
inline constexpr double kSeriesSwitch = 0.5;
inline constexpr double kSeriesRelStop = 1e-17;
inline constexpr int kSeriesMaxTerms = 200;
inline constexpr double kZeroTolFactor = 1e-11;

enum class SignClass { negative, zero, positive };

const char* to_string(SignClass s);

/// r(r-1)...(r-k+1)/k!, built term by term so k! never appears on its own.
double gen_binomial(double r, std::int64_t k);

/// (1+x)^r for |x| < 1 via exp(r*log1p(x)).
double stable_pow1p(double x, double r);

/// (1+x)^r - 1 via expm1(r*log1p(x)); accurate to a few ulp relative even
/// when the result is tiny.
double stable_pow1p_minus_one(double x, double r);

/// g(x) = 1 + (1+x)^a - (1-x)^b - (1+x)^(a+b), 0 < x < 1.
double g_value(const WeightParams& p, double x);

/// The two evaluation paths of g_value, exposed for cross-checking.
double g_series(const WeightParams& p, double x);
double g_direct(const WeightParams& p, double x);

/// Coefficient of x^k in the expansion of g for general (alpha, beta):
/// C(a,k) - (-1)^k C(b,k) - C(a+b,k).
double taylor_coefficient(const WeightParams& p, std::int64_t k);

/// Magnitude of the largest of the three binomials entering
/// taylor_coefficient; the natural scale for deciding whether it is zero.
double taylor_coefficient_scale(const WeightParams& p, std::int64_t k);

/// b_k(alpha) = taylor_coefficient at beta = (1-alpha)/2. Requires k >= 2.
double b_k(double alpha, std::int64_t k);

double b4_closed(double alpha);
double b6_closed(double alpha);

/// |value| <= kZeroTolFactor * (1 + scale) => zero.
SignClass classify_sign(double value, double scale);

struct CoefficientEntry {
  std::int64_t k;
  double value;
  SignClass sign;
};

struct CoefficientTable {
  double alpha = 0.0;
  std::int64_t k_min = 2;
  std::vector<CoefficientEntry> entries;
};

}  // namespace hardy
