#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "dyckmax/asymptotics.hpp"

using namespace dyckmax;
using std::numbers::pi;

TEST_CASE("f_of_t examples") {
  // single dominant term: 4 sqrt(pi) 10^{3/2} pi^2 e^{-10 pi^2} (mpmath: 3.0324e-40)
  const LimitEval big_t = f_of_t(10.0);
  CHECK(big_t.value < 1e-38);
  CHECK(big_t.value == doctest::Approx(3.032406182774817018e-40).epsilon(1e-12));
  const LimitEval small_t = f_of_t(0.001);
  CHECK(std::abs(small_t.value - 1.0) < 1e-6);
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(f_of_t(1.0 / (2.0 * x * x)).value == doctest::Approx(f_of_x(x).value).epsilon(1e-14));
  }
  CHECK_THROWS_AS(f_of_t(0.0), std::domain_error);
  CHECK_THROWS_AS(f_of_t(-1.0), std::domain_error);
}

TEST_CASE("the three printed prefactors of f coincide") {
  // 4 sqrt(pi) t^{3/2} at t = 1/(2x^2), 4 sqrt(pi) 2^{-3/2} x^{-3}, sqrt(2 pi) x^{-3}
  for (double x : {0.3, 1.0, 2.7}) {
    const double a = 4.0 * std::sqrt(pi) * std::pow(1.0 / (2.0 * x * x), 1.5);
    const double b = 4.0 * std::sqrt(pi) * std::pow(2.0, -1.5) / (x * x * x);
    const double c = std::sqrt(2.0 * pi) / (x * x * x);
    CHECK(a == doctest::Approx(c).epsilon(1e-14));
    CHECK(b == doctest::Approx(c).epsilon(1e-14));
  }
}

TEST_CASE("f_of_x examples") {
  CHECK(f_of_x(0.1).value < 1e-12);
  CHECK(std::abs(f_of_x(5.0).value - 1.0) < 1e-9);
  CHECK(std::abs(f_of_x(5.0).value - k_of_x(5.0).value) < 1e-9);
  // mpmath reference values
  CHECK(f_of_x(1.0).value == doctest::Approx(0.17792335564307067869).epsilon(1e-13));
  CHECK(f_of_x(2.0).value == doctest::Approx(0.98993612116132895998).epsilon(1e-13));
  CHECK(f_of_x(0.5).value == doctest::Approx(5.2948078813444317565e-7).epsilon(1e-12));
  CHECK_THROWS_AS(f_of_x(0.0), std::domain_error);
}

TEST_CASE("k_of_x examples") {
  CHECK(std::abs(k_of_x(5.0).value - 1.0) < 1e-12);
  CHECK(std::abs(k_of_x(1.0).value - f_of_x(1.0).value) < 1e-12);
  CHECK(std::abs(k_of_x(0.3).value - f_of_x(0.3).value) < 1e-12);
  CHECK(k_of_x(0.3).value >= 0.0);
  CHECK(f_of_x(0.3).value == doctest::Approx(1.4098285611329344965e-21).epsilon(1e-12));
  CHECK_THROWS_AS(k_of_x(-0.5), std::domain_error);
}

TEST_CASE("f = K on 0.3..3.0") {
  for (int i = 3; i <= 30; ++i) {
    const double x = i / 10.0;
    CAPTURE(x);
    CHECK(std::abs(f_of_x(x).raw - k_of_x(x).raw) < 1e-12);
  }
}

TEST_CASE("limit_cdf crosses over at x = 1") {
  CHECK(limit_cdf(0.7).terms_used == f_of_x(0.7).terms_used);
  CHECK(limit_cdf(1.0).terms_used == k_of_x(1.0).terms_used);
  CHECK(limit_cdf(3.0).terms_used <= 4);
}

TEST_CASE("jacobi identity residual") {
  for (double x : {1.0, 0.2, 3.0}) {
    CAPTURE(x);
    CHECK(jacobi_identity_residual(x) < 1e-12);
  }
  CHECK_THROWS_AS(jacobi_identity_residual(0.0), std::domain_error);
}

TEST_CASE("tail bounds dominate the brute-force remainder") {
  for (double a : {0.02, 0.2, 1.0, 4.9}) {
    for (long S : {5L, 20L, 60L}) {
      double brute_sq = 0.0;
      double brute = 0.0;
      for (long s = S + 1; s < S + 20000; ++s) {
        const double sd = static_cast<double>(s);
        brute_sq += sd * sd * std::exp(-a * sd * sd);
        brute += std::exp(-a * sd * sd);
      }
      CAPTURE(a);
      CAPTURE(S);
      CHECK(brute_sq <= squared_gaussian_tail(a, S));
      CHECK(brute <= gaussian_tail(a, S));
    }
  }
  CHECK(std::isinf(squared_gaussian_tail(1e-4, 1)));
}

TEST_CASE("doubling the term count moves values by less than the tail bound") {
  for (int i = 1; i <= 40; ++i) {
    const double x = 0.1 * i;
    for (auto eval : {&f_of_x, &k_of_x}) {
      const LimitEval base = eval(x, {});
      CHECK(base.tail_bound < SeriesSpec{}.abs_tol);
      SeriesSpec doubled;
      doubled.min_terms = 2 * base.terms_used;
      const double diff = std::abs(eval(x, doubled).raw - base.raw);
      CHECK(diff <= base.tail_bound + 4 * std::numeric_limits<double>::epsilon());
    }
  }
}

TEST_CASE("distribution-function axioms on a 100-point grid") {
  double prev_f = -1.0;
  double prev_k = -1.0;
  for (int i = 1; i <= 100; ++i) {
    const double x = 0.05 * i;
    const LimitEval f = f_of_x(x);
    const LimitEval k = k_of_x(x);
    // nondecreasing up to the certified truncation error plus roundoff
    CHECK(f.raw >= prev_f - 2 * f.tail_bound - 1e-13);
    CHECK(k.raw >= prev_k - 2 * k.tail_bound - 1e-13);
    CHECK(f.raw >= -1e-12);
    CHECK(f.raw <= 1 + 1e-12);
    CHECK(k.raw >= -1e-12);
    CHECK(k.raw <= 1 + 1e-12);
    prev_f = f.raw;
    prev_k = k.raw;
  }
  CHECK(f_of_x(0.05).value < 1e-12);
  CHECK(std::abs(k_of_x(5.0).value - 1.0) < 1e-12);
}

TEST_CASE("f_of_t is strictly decreasing in t on a sample grid") {
  double prev = 2.0;
  for (int i = 5; i <= 60; ++i) {
    const double t = 0.01 * i;
    const double v = f_of_t(t).raw;
    CHECK(v < prev);
    CHECK(v <= 1.0 + 1e-12);
    prev = v;
  }
}

TEST_CASE("truncation failure is reported") {
  SeriesSpec tight;
  tight.max_terms = 2;
  CHECK_THROWS_AS(k_of_x(0.3, tight), std::runtime_error);
}

TEST_CASE("scaled height cap snaps decimal grid products") {
  CHECK(scaled_height_cap(5000, 1.4000000000000001) == 140);
  CHECK(scaled_height_cap(5000, 0.6) == 60);
  CHECK(scaled_height_cap(5000, 0.6005) == 61);
  CHECK(scaled_height_cap(2, 0.01) == 1);
}

TEST_CASE("exact law approaches the limit law") {
  const std::vector<double> xs = {0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8, 2.0};
  double prev = 1.0;
  for (std::int64_t N : {500, 2000}) {
    double sup = 0.0;
    for (const auto& p : prelimit_cdf(N, xs)) {
      CHECK(p.probability >= 0.0);
      CHECK(p.probability <= 1.0);
      sup = std::max(sup, p.gap);
    }
    CHECK(sup < prev);
    prev = sup;
  }
  // mpmath on the exact ratio: sup gap 0.0546 at N = 500, 0.0348 at N = 2000
  CHECK(prev == doctest::Approx(0.034808158802516).epsilon(1e-6));
}
