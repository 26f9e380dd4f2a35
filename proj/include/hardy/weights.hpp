#pragma once

#include <cstdint>

#include "hardy/numerics.hpp"
#include "hardy/weights_params.hpp"

namespace hardy {

/// n^a with exact repeated multiplication for integer |a| <= 4.
double power(double n, double a);

/// w_{alpha,beta}(n): n^alpha g(1/n) for n >= 2, 1 + 2^alpha - 2^(alpha+beta) at n = 1.
double weight_w(const WeightParams& p, std::int64_t n);

/// weight_w(p,n) - c n^(alpha-2). Nonnegative iff the pointwise bound holds at n.
double lower_bound_margin(const WeightParams& p, double c, std::int64_t n);

/// max(1, c n^(alpha-2)): the scale against which margins are judged.
double margin_scale(const WeightParams& p, double c, std::int64_t n);

}  // namespace hardy
