#include "hardy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/summation.hpp"

namespace hardy {

WeightParams::WeightParams(double a, double b) : alpha(a), beta(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("WeightParams: alpha and beta must be finite");
  }
}

WeightParams WeightParams::hardy_optimal(double alpha) { return {alpha, 0.5 * (1.0 - alpha)}; }

double WeightParams::hardy_constant() const { return 0.25 * (alpha - 1.0) * (alpha - 1.0); }

const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::negative:
      return "negative";
    case SignClass::zero:
      return "zero";
    case SignClass::positive:
      return "positive";
  }
  return "?";
}

double gen_binomial(double r, std::int64_t k) {
  if (k < 0) throw DomainError("gen_binomial: k must be nonnegative");
  double term = 1.0;
  for (std::int64_t j = 0; j < k; ++j) {
    term *= (r - static_cast<double>(j)) / static_cast<double>(j + 1);
    if (term == 0.0) break;
  }
  return term;
}

double stable_pow1p(double x, double r) { return std::exp(r * std::log1p(x)); }

double stable_pow1p_minus_one(double x, double r) { return std::expm1(r * std::log1p(x)); }

double g_series(const WeightParams& p, double x) {
  const double a = p.alpha;
  const double b = p.beta;
  const double ab = a + b;
  // Past k >= max|r| every binomial term shrinks monotonically for x <= 1/2.
  const double peak = std::ceil(std::max({std::abs(a), std::abs(b), std::abs(ab)}));

  // ta = C(a,k) x^k, tb = C(b,k) (-x)^k, tc = C(a+b,k) x^k
  double ta = 1.0, tb = 1.0, tc = 1.0;
  CompensatedSum<> sum;
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    const double denom = kk + 1.0;
    ta *= (a - kk) / denom * x;
    tb *= (b - kk) / denom * (-x);
    tc *= (ab - kk) / denom * x;
    if (k + 1 < 2) continue;
    sum += ta - tb - tc;
    const double largest = std::max({std::abs(ta), std::abs(tb), std::abs(tc)});
    if (k + 1 >= peak && largest <= kSeriesRelStop * std::abs(sum.value())) break;
  }
  return sum.value();
}

double g_direct(const WeightParams& p, double x) {
  CompensatedSum<> sum;
  sum += stable_pow1p_minus_one(x, p.alpha);
  sum -= stable_pow1p_minus_one(-x, p.beta);
  sum -= stable_pow1p_minus_one(x, p.alpha + p.beta);
  return sum.value();
}

double g_value(const WeightParams& p, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("g_value: x must lie in (0,1), got " + std::to_string(x));
  }
  return x <= kSeriesSwitch ? g_series(p, x) : g_direct(p, x);
}

double taylor_coefficient(const WeightParams& p, std::int64_t k) {
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return gen_binomial(p.alpha, k) - sign * gen_binomial(p.beta, k) -
         gen_binomial(p.alpha + p.beta, k);
}

double taylor_coefficient_scale(const WeightParams& p, std::int64_t k) {
  return std::max({std::abs(gen_binomial(p.alpha, k)), std::abs(gen_binomial(p.beta, k)),
                   std::abs(gen_binomial(p.alpha + p.beta, k))});
}

double b_k(double alpha, std::int64_t k) {
  if (k < 2) throw DomainError("b_k: k must be >= 2");
  return taylor_coefficient(WeightParams::hardy_optimal(alpha), k);
}

double b4_closed(double alpha) {
  return (5.0 - alpha) * (1.0 - alpha) * (7.0 * alpha * alpha - 6.0 * alpha + 3.0) / 192.0;
}

double b6_closed(double alpha) {
  const double a = alpha;
  const double quartic = (((31.0 * a - 170.0) * a + 536.0) * a - 310.0) * a + 105.0;
  return (1.0 - a) * (9.0 - a) * quartic / 23040.0;
}

SignClass classify_sign(double value, double scale) {
  const double tol = kZeroTolFactor * (1.0 + std::abs(scale));
  if (std::abs(value) <= tol) return SignClass::zero;
  return value > 0.0 ? SignClass::positive : SignClass::negative;
}

}  // namespace hardy
