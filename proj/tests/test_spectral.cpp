#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/spectral.hpp"
#include "hardy/supersolution.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST_SUITE("spectral") {

TEST_CASE("build_pencil examples") {
  const auto p = build_pencil(0.0, 3);
  CHECK(p.size == 3);
  CHECK(p.stiff_diag == std::vector<double>{2, 2, 2});
  CHECK(p.stiff_off == std::vector<double>{-1, -1});
  CHECK(p.mass_diag[0] == 1.0);
  CHECK(p.mass_diag[1] == 0.25);
  CHECK(p.mass_diag[2] == doctest::Approx(1.0 / 9).epsilon(1e-16));
  const auto q = build_pencil(2.0, 2);
  CHECK(q.stiff_diag == std::vector<double>{5, 13});
  CHECK(q.stiff_off == std::vector<double>{-4});
  CHECK(q.mass_diag == std::vector<double>{1, 1});
  CHECK_THROWS_AS(build_pencil(0.0, 0), DomainError);
}

TEST_CASE("one-by-one pencil") {
  CHECK(min_eigenvalue(build_pencil(0.0, 1)) == doctest::Approx(2.0).epsilon(1e-10));
  for (double a : {-1.0, 0.5, 2.0, 5.0}) {
    CHECK(min_eigenvalue(build_pencil(a, 1)) == doctest::Approx(1 + std::exp2(a)).epsilon(1e-10));
  }
}

TEST_CASE("count_below is the inertia of A - lambda B") {
  const auto p = build_pencil(0.0, 3);
  CHECK(count_below(p, 0.0) == 0);
  const double l1 = oracle::dense_min_eigenvalue(0.0, 3);
  CHECK(count_below(p, l1 * (1 - 1e-9)) == 0);
  CHECK(count_below(p, l1 * (1 + 1e-9)) == 1);
  CHECK(count_below(p, 1e6) == 3);
}

TEST_CASE("min_eigenvalue against the dense determinant oracle") {
  for (double a : {0.0, 0.5, 2.0, 5.0, -1.0, 1.0}) {
    for (int n = 1; n <= 8; ++n) {
      const double got = min_eigenvalue(build_pencil(a, n), 1e-12);
      const double ref = oracle::dense_min_eigenvalue(a, n);
      CHECK(std::abs(got - ref) <= 1e-9 * (1 + ref));
    }
  }
}

TEST_CASE("stiffness_form is the left side of the inequality") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (double a : {0.0, 0.5, 3.0}) {
    const auto p = build_pencil(a, 50);
    std::vector<double> u(50), with_zero(51, 0.0);
    for (int i = 0; i < 50; ++i) with_zero[i + 1] = u[i] = d(rng);
    const LatticeFunction f(with_zero);
    CHECK(stiffness_form(p, u) == doctest::Approx(lhs_form(f, a)).epsilon(1e-13));
    long double mass = 0.0L;
    for (int i = 0; i < 50; ++i) mass += (long double)u[i] * u[i] * std::pow((long double)(i + 1), (long double)a - 2);
    CHECK(mass_form(p, u) == doctest::Approx(double(mass)).epsilon(1e-13));
  }
}

TEST_CASE("Rayleigh quotients never undercut lambda_min") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (double a : {0.0, 0.5, 2.0, 5.0}) {
    const auto p = build_pencil(a, 200);
    const double lmin = min_eigenvalue(p);
    for (int t = 0; t < 200; ++t) {
      std::vector<double> u(200);
      for (auto& x : u) x = d(rng);
      CHECK(stiffness_form(p, u) / mass_form(p, u) >= lmin * (1 - 1e-9));
    }
  }
}

TEST_CASE("section minima decrease with N and respect the Hardy constant") {
  std::vector<double> alphas;
  for (double a = 0.0; a < 1.0; a += 0.25) alphas.push_back(a);
  for (double a = 5.0; a <= 20.0; a += 2.5) alphas.push_back(a);
  const std::vector<std::int64_t> sizes{10, 100, 1000};
  for (double a : alphas) {
    const auto est = sharp_constant_estimate(a, sizes);
    const double c = (a - 1) * (a - 1) / 4;
    for (std::size_t i = 0; i < est.size(); ++i) {
      CHECK(est[i].lambda_min >= c - 1e-9 * (1 + c));
      if (i > 0) CHECK(est[i].lambda_min <= est[i - 1].lambda_min + 1e-9 * (1 + c));
    }
  }
}

TEST_CASE("frozen regression values") {
  // 40-digit Sturm bisection oracle
  CHECK(std::abs(min_eigenvalue(build_pencil(0.0, 1000)) - 0.3612037790035804) <= 1e-9);
  CHECK(std::abs(min_eigenvalue(build_pencil(0.0, 10000)) - 0.32097494504406887) <= 1e-9);
  CHECK(std::abs(min_eigenvalue(build_pencil(5.0, 1000)) - 4.445836841685682) <= 1e-8);
}

TEST_CASE("alpha = 1 sections drift toward zero") {
  const std::vector<std::int64_t> sizes{10, 100, 1000};
  const auto est = sharp_constant_estimate(1.0, sizes);
  CHECK(est[2].lambda_min < est[1].lambda_min);
  CHECK(est[1].lambda_min < est[0].lambda_min);
  CHECK(est[2].lambda_min > 0.0);
}

TEST_CASE("schedule and pencil validation") {
  const std::vector<std::int64_t> bad{100, 10};
  CHECK_THROWS_AS(sharp_constant_estimate(0.0, bad), DomainError);
  auto p = build_pencil(0.0, 4);
  p.mass_diag[2] = -1.0;
  CHECK_THROWS_AS(min_eigenvalue(p), BracketFailure);
  auto q = build_pencil(0.0, 4);
  q.stiff_off[1] = -5.0;  // indefinite stiffness
  CHECK_THROWS_AS(min_eigenvalue(q), BracketFailure);
  CHECK_THROWS_AS(min_eigenvalue(build_pencil(0.0, 4), 0.0), DomainError);
  CHECK(default_section_schedule() == std::vector<std::int64_t>{100, 1000, 10000, 100000});
}

}
