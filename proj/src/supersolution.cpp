#include "hardy/supersolution.hpp"

#include <algorithm>
#include <limits>

#include "hardy/summation.hpp"
#include "hardy/weights.hpp"

namespace hardy {

double criterion_scale(const SupersolutionTriplet<double>& t, std::int64_t n) {
  const double p0 = std::abs(t.phi(n - 1));
  const double p1 = std::abs(t.phi(n));
  const double p2 = std::abs(t.phi(n + 1));
  const double v1 = std::abs(t.v(n));
  const double v2 = std::abs(t.v(n + 1));
  return (2.0 * p1 + p0 + p2) * v1 + (p1 + p2) * (v1 + v2) + std::abs(t.w(n)) * p1;
}

SupersolutionTriplet<double> power_triplet(const WeightParams& p) {
  SupersolutionTriplet<double> t;
  t.v = [a = p.alpha](std::int64_t n) { return n <= 0 ? 0.0 : power(static_cast<double>(n), a); };
  t.phi = [b = p.beta](std::int64_t n) { return n <= 0 ? 0.0 : power(static_cast<double>(n), b); };
  t.w = [p](std::int64_t n) { return weight_w(p, n); };
  return t;
}

LatticeFunction::LatticeFunction(std::vector<double> values) : values_(std::move(values)) {
  if (!values_.empty() && values_.front() != 0.0) {
    throw DomainError("LatticeFunction: u(0) must be 0");
  }
  while (!values_.empty() && values_.back() == 0.0) values_.pop_back();
}

double dirichlet_form(const LatticeFunction& u, const SeqFn<double>& v) {
  CompensatedSum<> s;
  for (std::int64_t n = 1; n <= u.support_end(); ++n) {
    const double d = u(n) - u(n - 1);
    s += d * d * v(n);
  }
  return s.value();
}

double lhs_form(const LatticeFunction& u, double alpha) {
  return dirichlet_form(u, [alpha](std::int64_t n) { return power(static_cast<double>(n), alpha); });
}

double rhs_form(const LatticeFunction& u, const SeqFn<double>& w) {
  CompensatedSum<> s;
  for (std::int64_t n = 1; n < u.support_end(); ++n) {
    const double x = u(n);
    s += w(n) * x * x;
  }
  return s.value();
}

InequalityCheck verify_inequality(const SupersolutionTriplet<double>& t, const LatticeFunction& u) {
  const std::int64_t m = u.support_end();
  // Memoized handle values on 0 .. m. u vanishes from m on, so the
  // criterion is only needed on 1 .. m-1.
  std::vector<double> v(static_cast<std::size_t>(m + 1), 0.0);
  std::vector<double> phi(static_cast<std::size_t>(m + 1), 0.0);
  std::vector<double> w(static_cast<std::size_t>(m + 1), 0.0);
  for (std::int64_t n = 0; n <= m; ++n) {
    const auto i = static_cast<std::size_t>(n);
    phi[i] = t.phi(n);
    if (n >= 1) {
      v[i] = t.v(n);
      w[i] = t.w(n);
    }
  }
  const SupersolutionTriplet<double> cached{
      [&v](std::int64_t n) { return v[static_cast<std::size_t>(n)]; },
      [&phi](std::int64_t n) { return phi[static_cast<std::size_t>(n)]; },
      [&w](std::int64_t n) { return w[static_cast<std::size_t>(n)]; }};

  InequalityCheck out;
  out.min_criterion_margin = std::numeric_limits<double>::infinity();
  for (std::int64_t n = 1; n < m; ++n) {
    if (!(phi[static_cast<std::size_t>(n)] > 0.0)) {
      throw DegenerateSupersolution("verify_inequality: phi(" + std::to_string(n) + ") <= 0");
    }
    const double margin = criterion_margin(cached, n);
    out.min_criterion_margin = std::min(out.min_criterion_margin, margin);
    if (out.criterion_ok && margin < -kCriterionRelTol * criterion_scale(cached, n)) {
      out.criterion_ok = false;
      out.criterion_violation_n = n;
    }
  }
  if (m <= 1) out.min_criterion_margin = 0.0;

  out.lhs = dirichlet_form(u, cached.v);
  out.rhs = rhs_form(u, cached.w);
  out.difference = out.lhs - out.rhs;
  out.tolerance = kInequalityRelTol * (1.0 + std::abs(out.lhs));
  out.pass = out.lhs >= out.rhs - out.tolerance;
  return out;
}

}  // namespace hardy
