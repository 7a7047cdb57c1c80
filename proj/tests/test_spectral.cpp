#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <vector>

#include "dyckmax/exact_counts.hpp"
#include "dyckmax/spectral.hpp"

using namespace dyckmax;
using std::numbers::pi;

TEST_CASE("eigenvalues of the path graph") {
  CHECK(eigenvalues(1) == std::vector<double>{0.0});
  const auto two = eigenvalues(2);
  CHECK(two[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two[1] == doctest::Approx(-1.0).epsilon(1e-15));
  const auto three = eigenvalues(3);
  CHECK(three[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(three[1] == 0.0);
  CHECK(three[2] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  for (std::int64_t n : {4, 11, 64}) {
    const auto ev = eigenvalues(n);
    for (std::size_t k = 0; k + 1 < ev.size(); ++k) CHECK(ev[k] > ev[k + 1]);
    for (std::size_t k = 0; k < ev.size(); ++k) CHECK(ev[k] == -ev[ev.size() - 1 - k]);
  }
}

TEST_CASE("g_term values and symmetry") {
  CHECK(g_term(0, 1, 1) == doctest::Approx(1.0));
  CHECK(g_term(2, 2, 1) == doctest::Approx(0.046875).epsilon(1e-14));
  for (std::int64_t n : {2, 5, 10, 33}) {
    for (std::int64_t N : {1, 7, 100}) {
      for (std::int64_t s = 1; s <= n; ++s) {
        const double g = g_term(N, n, s);
        CHECK(g >= 0.0);
        CHECK(g <= 1.0);
        CHECK(g == g_term(N, n, n + 1 - s));
      }
    }
  }
  CHECK_THROWS_AS(g_term(1, 4, 5), std::domain_error);
}

TEST_CASE("spectral_count examples") {
  CHECK(spectral_count(2, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(spectral_count(3, 10) - 5.0) < 1e-9);
  const double exact = count_bounded(50, 5).get_d();
  CHECK(std::abs(spectral_count(50, 5) - exact) / exact < 1e-9);
  const auto sum = spectral_sum(17, 9);
  double total = 0.0;
  for (double t : sum.terms) {
    CHECK(t >= 0.0);
    total += t;
  }
  CHECK(sum.total == doctest::Approx(total).epsilon(1e-14));
}

TEST_CASE("spectral_count refuses N past the floating range") {
  CHECK_NOTHROW(spectral_count(kMaxDirectSpectralN, 3));
  CHECK_THROWS_WITH_AS(spectral_count(kMaxDirectSpectralN + 1, 3), doctest::Contains("log_spectral_ratio"),
                       std::range_error);
}

TEST_CASE("spectral vs exact on N <= 300, n <= 60") {
  double worst = 0.0;
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto exact = count_bounded_series(300, n);
    for (std::int64_t N = 1; N <= 300; ++N) {
      const double approx = spectral_count(N, n);
      const BigCount& c = exact[N];
      const double err = sgn(c) == 0 ? std::abs(approx) : std::abs(approx - c.get_d()) / c.get_d();
      worst = std::max(worst, err);
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("log_spectral_ratio examples") {
  CHECK(std::abs(log_spectral_ratio(3, 10)) < 1e-9);
  // mpmath, 60 digits, on the exact integer ratio
  CHECK(std::abs(log_spectral_ratio(200, 10) - -11.55985606486543412) < 1e-6);
  CHECK(std::abs(log_spectral_ratio(200, 10) - log_ratio(count_bounded(200, 10), catalan(200))) < 1e-6);
}

TEST_CASE("log_spectral_ratio matches exact big-int ratios for N <= 2000, n <= 20") {
  for (std::int64_t N : {1, 10, 99, 500, 1234, 2000}) {
    const BigCount cat = catalan(N);
    for (std::int64_t n : {1, 2, 3, 8, 13, 20}) {
      const double exact = log_ratio(count_bounded(N, n), cat);
      const double got = log_spectral_ratio(N, n);
      CAPTURE(N);
      CAPTURE(n);
      if (std::isinf(exact)) {
        CHECK(std::isinf(got));
      } else {
        CHECK(std::abs(got - exact) < 1e-6);
      }
    }
  }
}

TEST_CASE("G(1) dominates the interior terms as N grows (n = 10)") {
  const double a = log_dominance_ratio(1000, 10);
  const double b = log_dominance_ratio(10000, 10);
  const double c = log_dominance_ratio(100000, 10);
  CHECK(a > b);
  CHECK(b > c);
  CHECK(c < -1000.0);
}

TEST_CASE("cosine bound") {
  const std::vector<double> zero{0.0};
  CHECK(cosine_bound_check(zero));
  const std::vector<double> edge{pi / 2};
  CHECK(cosine_bound_check(edge));
  CHECK(std::exp(-pi * pi / 8) == doctest::Approx(0.2913).epsilon(1e-4));
  std::vector<double> grid(10000);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = (pi / 2) * static_cast<double>(i) / 9999.0;
  CHECK(cosine_bound_check(grid));
  const std::vector<double> outside{2.0};
  CHECK_THROWS_AS(cosine_bound_check(outside), std::domain_error);
}

TEST_CASE("log_sum_exp handles -inf entries") {
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> v{-inf, std::log(2.0), std::log(3.0)};
  CHECK(log_sum_exp(v) == doctest::Approx(std::log(5.0)));
  const std::vector<double> none{-inf, -inf};
  CHECK(log_sum_exp(none) == -inf);
}
