#include "hardy/weights.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/summation.hpp"

namespace hardy {

double power(double n, double a) {
  if (a == std::trunc(a) && std::abs(a) <= 4.0) {
    const int e = static_cast<int>(std::abs(a));
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= n;
    return a < 0.0 ? 1.0 / r : r;
  }
  return std::pow(n, a);
}

double weight_w(const WeightParams& p, std::int64_t n) {
  if (n <= 0) throw DomainError("weight_w: n must be >= 1");
  if (n == 1) {
    CompensatedSum<> s(1.0);
    s += std::exp2(p.alpha);
    s -= std::exp2(p.alpha + p.beta);
    return s.value();
  }
  const double nd = static_cast<double>(n);
  return power(nd, p.alpha) * g_value(p, 1.0 / nd);
}

double lower_bound_margin(const WeightParams& p, double c, std::int64_t n) {
  const double w = weight_w(p, n);
  return w - c * power(static_cast<double>(n), p.alpha - 2.0);
}

double margin_scale(const WeightParams& p, double c, std::int64_t n) {
  return std::max(1.0, c * power(static_cast<double>(n), p.alpha - 2.0));
}

}  // namespace hardy
