#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/weights_params.hpp"

namespace hardy {

/// A real sequence on {0, 1, 2, ...}. Templated on the scalar so the same
/// formulas can be replayed in extended precision.
template <class T = double>
using SeqFn = std::function<T(std::int64_t)>;

/// (v, phi, w) of the supersolution criterion. v and w live on n >= 1,
/// phi on n >= 0 with phi(0) >= 0 and phi(n) > 0 for n >= 1.
template <class T = double>
struct SupersolutionTriplet {
  SeqFn<T> v;
  SeqFn<T> phi;
  SeqFn<T> w;
};

/// 2 phi(n) - phi(n-1) - phi(n+1) for n >= 1, phi(0) - phi(1) at n = 0.
template <class T>
T combinatorial_laplacian(const SeqFn<T>& phi, std::int64_t n) {
  if (n < 0) throw DomainError("combinatorial_laplacian: n must be >= 0");
  if (n == 0) return phi(0) - phi(1);
  const T center = phi(n);
  return (center - phi(n - 1)) + (center - phi(n + 1));
}

/// Left side of the criterion minus w(n) phi(n); >= 0 iff the criterion holds at n.
template <class T>
T criterion_margin(const SupersolutionTriplet<T>& t, std::int64_t n) {
  if (n < 1) throw DomainError("criterion_margin: n must be >= 1");
  const T dphi = t.phi(n + 1) - t.phi(n);
  const T dv = t.v(n + 1) - t.v(n);
  return combinatorial_laplacian(t.phi, n) * t.v(n) - dphi * dv - t.w(n) * t.phi(n);
}

/// The largest w(n) for which the criterion holds at n (with equality).
template <class T>
T derived_weight(const SeqFn<T>& v, const SeqFn<T>& phi, std::int64_t n) {
  if (n < 1) throw DomainError("derived_weight: n must be >= 1");
  const T p = phi(n);
  if (!(p > T(0))) {
    throw DegenerateSupersolution("derived_weight: phi(" + std::to_string(n) + ") <= 0");
  }
  const T dphi = phi(n + 1) - p;
  const T dv = v(n + 1) - v(n);
  return (combinatorial_laplacian(phi, n) * v(n) - dphi * dv) / p;
}

/// Sum of the magnitudes of the products entering criterion_margin before
/// cancellation; rounding in criterion_margin is a small multiple of eps
/// times this.
double criterion_scale(const SupersolutionTriplet<double>& t, std::int64_t n);

/// v = n^alpha, phi = n^beta with phi(0) = 0, w = w_{alpha,beta}.
SupersolutionTriplet<double> power_triplet(const WeightParams& p);

/// Finitely supported sequence with u(0) = 0. Trailing zeros are dropped, so
/// values().size() is the support end: u(n) = 0 for n >= support_end().
class LatticeFunction {
 public:
  LatticeFunction() = default;
  explicit LatticeFunction(std::vector<double> values);

  double operator()(std::int64_t n) const {
    return (n >= 0 && n < support_end()) ? values_[static_cast<std::size_t>(n)] : 0.0;
  }
  std::int64_t support_end() const { return static_cast<std::int64_t>(values_.size()); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// sum_{n>=1} (u(n) - u(n-1))^2 v(n), compensated.
double dirichlet_form(const LatticeFunction& u, const SeqFn<double>& v);

/// dirichlet_form with v = n^alpha.
double lhs_form(const LatticeFunction& u, double alpha);

/// sum_{n>=1} w(n) u(n)^2, compensated.
double rhs_form(const LatticeFunction& u, const SeqFn<double>& w);

inline constexpr double kCriterionRelTol = 1e-12;
inline constexpr double kInequalityRelTol = 1e-10;

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double difference = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool criterion_ok = true;
  std::optional<std::int64_t> criterion_violation_n;
  double min_criterion_margin = 0.0;
};

/// Checks the criterion on the support of u (n = 1 .. support_end - 1) and the
/// resulting inequality lhs >= rhs - 1e-10 (1 + |lhs|). The left side uses
/// the triplet's v. Handle values are evaluated once per call.
InequalityCheck verify_inequality(const SupersolutionTriplet<double>& t, const LatticeFunction& u);

}  // namespace hardy
