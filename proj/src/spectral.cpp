#include "dyckmax/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dyckmax/kernels.hpp"

namespace dyckmax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_positive_cap(std::int64_t n) {
  if (n < 1) throw std::domain_error("height cap n must be >= 1");
}

void require_half_length(std::int64_t N) {
  if (N < 0) throw std::domain_error("half-length N must be >= 0");
}

double angle(std::int64_t k, std::int64_t n) {
  return std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1);
}

}  // namespace

std::vector<double> eigenvalues(std::int64_t n) {
  require_positive_cap(n);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    // Evaluate on the folded index and restore the sign, so the spectrum is
    // exactly antisymmetric and the middle eigenvalue of odd n is exactly 0.
    const std::int64_t j = std::min(k, n + 1 - k);
    double v = 2.0 * std::cos(angle(j, n));
    if (2 * j == n + 1) v = 0.0;
    out[static_cast<std::size_t>(k - 1)] = (k == j) ? v : -v;
  }
  return out;
}

double g_term(std::int64_t N, std::int64_t n, std::int64_t s) {
  const double lg = log_g_term(N, n, s);
  return lg == kNegInf ? 0.0 : std::exp(lg);
}

double log_g_term(std::int64_t N, std::int64_t n, std::int64_t s) {
  require_half_length(N);
  require_positive_cap(n);
  if (s < 1 || s > n) throw std::domain_error("index s must satisfy 1 <= s <= n");
  const std::int64_t k = std::min(s, n + 1 - s);
  const double log_sin2 = 2.0 * std::log(std::sin(angle(k, n)));
  if (N == 0) return log_sin2;
  if (2 * k == n + 1) return kNegInf;
  return log_sin2 + 2.0 * static_cast<double>(N) * std::log(std::cos(angle(k, n)));
}

SpectralSum spectral_sum(std::int64_t N, std::int64_t n) {
  require_half_length(N);
  require_positive_cap(n);
  SpectralSum out;
  out.N = N;
  out.n = n;
  out.terms.resize(static_cast<std::size_t>(n));
  kernels::spectral_terms_omp(N, n, out.terms);

  // Pair s with n+1-s (equal magnitudes), then add pairs smallest first.
  std::vector<double> pairs;
  pairs.reserve(static_cast<std::size_t>(n / 2 + 1));
  for (std::int64_t s = 1; 2 * s <= n + 1; ++s) {
    const double a = out.terms[static_cast<std::size_t>(s - 1)];
    pairs.push_back(2 * s == n + 1 ? a : a + out.terms[static_cast<std::size_t>(n - s)]);
  }
  std::sort(pairs.begin(), pairs.end());
  double total = 0.0;
  for (double p : pairs) total += p;
  out.total = total;
  return out;
}

double spectral_count(std::int64_t N, std::int64_t n) {
  require_half_length(N);
  require_positive_cap(n);
  if (N > kMaxDirectSpectralN) {
    throw std::range_error("spectral_count: 4^N overflows the floating range for N > " +
                           std::to_string(kMaxDirectSpectralN) + "; use log_spectral_ratio");
  }
  return spectral_sum(N, n).total;
}

double log_catalan(std::int64_t N) {
  require_half_length(N);
  const auto x = static_cast<double>(N);
  return std::lgamma(2.0 * x + 1.0) - std::lgamma(x + 1.0) - std::lgamma(x + 2.0);
}

double log_sum_exp(std::span<const double> values) {
  double peak = kNegInf;
  for (double v : values) peak = std::max(peak, v);
  if (peak == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double v : values) {
    if (v != kNegInf) sum += std::exp(v - peak);
  }
  return peak + std::log(sum);
}

double log_spectral_ratio(std::int64_t N, std::int64_t n) {
  require_half_length(N);
  require_positive_cap(n);
  std::vector<double> logs(static_cast<std::size_t>(n));
  kernels::log_spectral_terms_omp(N, n, logs);
  return log_sum_exp(logs) - log_catalan(N);
}

double log_dominance_ratio(std::int64_t N, std::int64_t n) {
  if (n < 3) throw std::domain_error("log_dominance_ratio requires n >= 3");
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(n - 2));
  for (std::int64_t s = 2; s <= n - 1; ++s) logs.push_back(log_g_term(N, n, s));
  return log_sum_exp(logs) - log_g_term(N, n, 1);
}

bool cosine_bound_check(std::span<const double> grid) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double slack = std::numeric_limits<double>::epsilon();
  bool holds = true;
  for (double x : grid) {
    if (!(x >= 0.0 && x <= half_pi)) throw std::domain_error("cosine bound grid point outside [0, pi/2]");
    if (std::cos(x) > std::exp(-x * x / 2.0) + slack) holds = false;
  }
  return holds;
}

}  // namespace dyckmax
