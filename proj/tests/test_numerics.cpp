#include <doctest.h>

#include <cmath>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/numerics.hpp"
#include "hardy/summation.hpp"
#include "oracles.hpp"

using namespace hardy;
using oracle::Rational;

TEST_SUITE("numerics") {

TEST_CASE("gen_binomial trivial values") {
  CHECK(gen_binomial(7.3, 0) == 1.0);
  CHECK(gen_binomial(-2.5, 0) == 1.0);
  CHECK(gen_binomial(5.0, 7) == 0.0);
  CHECK(gen_binomial(5.0, 5) == 1.0);
  CHECK(gen_binomial(10.0, 3) == 120.0);
  CHECK_THROWS_AS(gen_binomial(1.0, -1), DomainError);
}

TEST_CASE("gen_binomial matches exact rationals") {
  CHECK(gen_binomial(0.5, 4) == doctest::Approx(-5.0 / 128).epsilon(1e-15));
  const Rational rs[] = {Rational(1, 2), Rational(-3, 4), Rational(7, 3), Rational(-5, 2), Rational(1, 10),
                         Rational(11, 1), Rational(-1, 1)};
  for (const auto& r : rs) {
    const double rd = oracle::to_double(r);
    for (std::int64_t k = 0; k <= 80; ++k) {
      const double exact = oracle::to_double(oracle::binom(r, k));
      const double got = gen_binomial(rd, k);
      // one rounding per factor, plus the rounding of r itself
      CHECK(std::abs(got - exact) <= 1e-15 * (4 * k + 4) * std::abs(exact) + 1e-300);
    }
  }
}

TEST_CASE("gen_binomial satisfies Pascal's rule") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double r = dist(rng);
    for (std::int64_t k = 1; k <= 30; ++k) {
      const double lhs = gen_binomial(r + 1.0, k);
      const double rhs = gen_binomial(r, k) + gen_binomial(r, k - 1);
      const double scale = std::abs(gen_binomial(r, k)) + std::abs(gen_binomial(r, k - 1));
      CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + scale));
    }
  }
}

TEST_CASE("stable_pow1p examples") {
  CHECK(stable_pow1p(0.0, 7.3) == 1.0);
  CHECK(stable_pow1p(0.5, 2.0) == doctest::Approx(2.25).epsilon(1e-15));
  const double exact = oracle::to_double(oracle::qpow(1 + static_cast<oracle::quad>(1e-8), static_cast<oracle::quad>(0.5)));
  CHECK(std::abs(stable_pow1p(1e-8, 0.5) - exact) <= 1e-16 * exact);
  CHECK(std::abs(exact - (1.0 + 5e-9)) <= 1e-16);
}

TEST_CASE("stable_pow1p_minus_one keeps relative accuracy for tiny results") {
  const double xs[] = {1e-14, -3e-12, 1e-9, 2.5e-6, -0.01, 0.3, -0.7, 0.95};
  const double rs[] = {0.5, -1.5, 2.0, 3.25, -0.25, 7.0};
  for (double x : xs) {
    for (double r : rs) {
      const oracle::quad q = oracle::qpow(1 + static_cast<oracle::quad>(x), static_cast<oracle::quad>(r)) - 1;
      const double exact = oracle::to_double(q);
      CHECK(std::abs(stable_pow1p_minus_one(x, r) - exact) <= 1e-14 * std::abs(exact));
    }
  }
}

namespace {

oracle::quad g_quad(double a, double b, double x) {
  using Q = oracle::quad;
  const Q qx = x;
  return 1 + powq(1 + qx, Q(a)) - powq(1 - qx, Q(b)) - powq(1 + qx, Q(a) + Q(b));
}

}  // namespace

TEST_CASE("g_value examples") {
  const WeightParams p(0.0, 0.5);
  const double expect = 2.0 - std::sqrt(0.5) - std::sqrt(1.5);
  CHECK(g_value(p, 0.5) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(g_value(p, 0.5) == doctest::Approx(0.06814835).epsilon(1e-7));
  for (double a : {-2.0, 0.0, 1.5, 5.0}) CHECK(g_value(WeightParams(a, 0.0), 0.3) == 0.0);
  CHECK_THROWS_AS(g_value(p, 0.0), DomainError);
  CHECK_THROWS_AS(g_value(p, 1.0), DomainError);
  CHECK_THROWS_AS(g_value(p, -0.2), DomainError);
}

TEST_CASE("series and direct paths agree") {
  const WeightParams p(0.0, 0.5);
  CHECK(g_series(p, 0.25) == doctest::Approx(g_direct(p, 0.25)).epsilon(1e-13));
  for (const auto& q : {WeightParams(0.5, 0.25), WeightParams(5.0, -2.0), WeightParams(2.0, -0.5),
                        WeightParams(-1.0, 1.0), WeightParams(0.3, 0.35)}) {
    for (double x = 0.05; x <= 0.5; x += 0.05) {
      CHECK(g_series(q, x) == doctest::Approx(g_direct(q, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("g_value against a quad-precision oracle") {
  // x^2 coefficient beta (1 - alpha - beta) is nonzero for all of these
  const WeightParams params[] = {WeightParams(0.0, 0.5), WeightParams(0.5, 0.25), WeightParams(5.0, -2.0),
                                 WeightParams(0.3, 0.35), WeightParams(-1.0, 1.0), WeightParams(1.0, 0.25),
                                 WeightParams(12.0, -5.5)};
  for (const auto& p : params) {
    for (double x : {1e-7, 1e-5, 1e-3, 0.01, 0.1, 0.2, 0.37, 0.5}) {
      const double exact = oracle::to_double(g_quad(p.alpha, p.beta, x));
      CHECK(std::abs(g_value(p, x) - exact) <= 1e-13 * std::abs(exact));
    }
    for (double x : {0.55, 0.7, 0.9, 0.99}) {
      const double exact = oracle::to_double(g_quad(p.alpha, p.beta, x));
      const double scale = 1.0 + std::pow(1 + x, p.alpha) + std::pow(1 - x, p.beta) +
                           std::pow(1 + x, p.alpha + p.beta);
      CHECK(std::abs(g_value(p, x) - exact) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("b_k examples") {
  CHECK(std::abs(b_k(0.0, 3)) <= 1e-16);
  CHECK(b_k(0.0, 4) == doctest::Approx(5.0 / 64).epsilon(1e-15));
  CHECK(b_k(0.5, 3) == doctest::Approx(0.078125).epsilon(1e-14));
  CHECK(b_k(5.0, 2) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(b_k(0.5, 1), DomainError);
}

TEST_CASE("b_2 is the Hardy constant") {
  for (double a = -3.0; a <= 12.0; a += 0.25) {
    CHECK(b_k(a, 2) == doctest::Approx((a - 1) * (a - 1) / 4).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("b_k matches exact rationals") {
  const Rational alphas[] = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(3, 4), Rational(5),
                             Rational(7), Rational(-1, 2), Rational(1, 5)};
  for (const auto& a : alphas) {
    const double ad = oracle::to_double(a);
    for (std::int64_t k = 2; k <= 60; ++k) {
      const double exact = oracle::to_double(oracle::b_k(a, k));
      const double scale = taylor_coefficient_scale(WeightParams::hardy_optimal(ad), k);
      CHECK(std::abs(b_k(ad, k) - exact) <= 1e-14 * (std::abs(exact) + scale));
    }
  }
}

TEST_CASE("closed forms for b_4 and b_6") {
  CHECK(b4_closed(1.0) == 0.0);
  CHECK(b6_closed(0.0) == doctest::Approx(21.0 / 512).epsilon(1e-15));
  CHECK(b6_closed(5.0) == doctest::Approx(-7.0).epsilon(1e-15));
  CHECK(b_k(5.0, 6) == doctest::Approx(-7.0).epsilon(1e-14));
  for (double a = -2.0; a <= 12.0; a += 0.1) {
    CHECK(b_k(a, 4) == doctest::Approx(b4_closed(a)).epsilon(1e-12).scale(1.0));
    CHECK(b_k(a, 6) == doctest::Approx(b6_closed(a)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("classify_sign") {
  CHECK(classify_sign(1e-3, 1.0) == SignClass::positive);
  CHECK(classify_sign(-1e-3, 1.0) == SignClass::negative);
  CHECK(classify_sign(1e-13, 1.0) == SignClass::zero);
  CHECK(classify_sign(-1e-12, 100.0) == SignClass::zero);
  CHECK(classify_sign(0.0, 0.0) == SignClass::zero);
  CHECK(std::string(to_string(SignClass::negative)) == "negative");
}

TEST_CASE("compensated sum survives catastrophic cancellation") {
  CompensatedSum<> s;
  s += 1e16;
  s += 1.0;
  s += -1e16;
  CHECK(s.value() == 1.0);
  CompensatedSum<> t;
  for (int i = 0; i < 10; ++i) t += 0.1;
  CHECK(t.value() == 1.0);
}

TEST_CASE("WeightParams") {
  CHECK_THROWS_AS(WeightParams(std::nan(""), 0.0), DomainError);
  CHECK_THROWS_AS(WeightParams(0.0, INFINITY), DomainError);
  const auto p = WeightParams::hardy_optimal(5.0);
  CHECK(p.beta == -2.0);
  CHECK(p.hardy_constant() == 4.0);
}

}
