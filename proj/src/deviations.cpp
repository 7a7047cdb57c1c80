#include "dyckmax/deviations.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dyckmax/exact_counts.hpp"
#include "dyckmax/spectral.hpp"

namespace dyckmax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double gap_between(double a, double b) {
  if (std::isinf(a) && std::isinf(b) && (a < 0) == (b < 0)) return 0.0;
  return std::abs(a - b);
}

// Scales a log-probability, keeping -inf as -inf.
double scaled(double factor, double log_p) { return log_p == kNegInf ? kNegInf : factor * log_p; }

}  // namespace

std::int64_t round_half_away(double v) { return static_cast<std::int64_t>(std::round(v)); }

RateDiagnostic md_rate_prelimit(std::int64_t N, std::int64_t n) {
  if (N < 1) throw std::domain_error("md_rate_prelimit requires N >= 1");
  if (n < 2) throw std::domain_error("md_rate_prelimit requires n >= 2 (n = 1 has probability 0)");
  RateDiagnostic d;
  d.N = N;
  d.n = n;
  const double log_ratio = log_spectral_ratio(N, n);
  if (log_ratio == kNegInf) throw std::logic_error("md_rate_prelimit: zero probability for n >= 2");
  const double scale = static_cast<double>((n + 1) * (n + 1)) / static_cast<double>(N);
  d.prelimit = scale * log_ratio;
  d.limit = -kPi * kPi;
  d.gap = gap_between(d.prelimit, d.limit);
  d.outside_regime = N < n * n;
  return d;
}

double md_asymptotic_log(std::int64_t N, std::int64_t n) {
  if (N < 1 || n < 1) throw std::domain_error("md_asymptotic_log requires N >= 1 and n >= 1");
  const auto Nd = static_cast<double>(N);
  const auto n1 = static_cast<double>(n + 1);
  return std::log(4.0 * std::pow(kPi, 1.5) * std::pow(Nd, 1.5) / (n1 * n1 * n1)) - kPi * kPi * Nd / (n1 * n1);
}

BigCount upper_tail_count(std::int64_t N, std::int64_t m) {
  if (N < 1) throw std::domain_error("upper_tail_count requires N >= 1");
  if (m < 0) throw std::domain_error("upper_tail_count requires m >= 0");
  if (m >= N) return 0;
  return catalan(N) - count_bounded(N, m + 1);
}

double upper_tail_prob_exact(std::int64_t N, std::int64_t m) {
  if (N < 1) throw std::domain_error("upper_tail_prob_exact requires N >= 1");
  if (m < 1) throw std::domain_error("upper_tail_prob_exact requires m >= 1");
  if (m >= N) return kNegInf;
  return log_ratio(upper_tail_count(N, m), catalan(N));
}

ReflectionSandwich reflection_sandwich(std::int64_t N, std::int64_t m) {
  if (N < 1) throw std::domain_error("reflection_sandwich requires N >= 1");
  if (m < 0 || m >= N) throw std::domain_error("reflection_sandwich requires 0 <= m < N");
  ReflectionSandwich s;
  s.N = N;
  s.m = m;
  s.exceed = upper_tail_count(N, m);
  s.upper = count_touch_upper_bound(N, m + 1);
  s.lower_level = ((N + m + 1) % 2 == 0) ? m + 1 : m + 2;
  s.lower = s.lower_level <= N ? count_peak_at_midpoint(N, s.lower_level) : BigCount(0);
  s.holds = s.lower <= s.exceed && s.exceed <= s.upper;
  return s;
}

RateDiagnostic ld_gaussian_prelimit(std::int64_t N, std::int64_t n, double x) {
  if (N < 1 || n < 1) throw std::domain_error("ld_gaussian_prelimit requires N >= 1 and n >= 1");
  if (!(x > 0.0)) throw std::domain_error("ld_gaussian_prelimit requires x > 0");
  const std::int64_t m = round_half_away(x * static_cast<double>(n));
  if (m < 1) throw std::domain_error("ld_gaussian_prelimit: x*n rounds to height 0");
  if (m > N) throw std::domain_error("ld_gaussian_prelimit: x*n rounds above the maximum height N");
  RateDiagnostic d;
  d.N = N;
  d.n = n;
  d.x = x;
  d.m = m;
  const double scale = static_cast<double>(N) / (2.0 * static_cast<double>(n) * static_cast<double>(n));
  const double log_p = upper_tail_prob_exact(N, m);
  d.impossible = log_p == kNegInf;
  d.prelimit = scaled(scale, log_p);
  d.limit = -x * x;
  d.gap = gap_between(d.prelimit, d.limit);
  d.outside_regime = !(n <= N && N <= n * n);
  return d;
}

RateDiagnostic ld_unit_prelimit(std::int64_t N, std::int64_t n) {
  if (N < 1 || n < 1) throw std::domain_error("ld_unit_prelimit requires N >= 1 and n >= 1");
  if (n > N) throw std::domain_error("ld_unit_prelimit requires n <= N");
  RateDiagnostic d;
  d.N = N;
  d.n = n;
  d.x = 1.0;
  d.m = n;
  const double log_p = upper_tail_prob_exact(N, n);
  d.impossible = log_p == kNegInf;
  d.prelimit = scaled(static_cast<double>(N) / (static_cast<double>(n) * static_cast<double>(n)), log_p);
  d.limit = -2.0;
  d.gap = gap_between(d.prelimit, d.limit);
  d.outside_regime = !(n <= N && N <= n * n);
  d.extrapolated = true;
  return d;
}

double h_rate(double x) {
  if (!(x > 0.0)) throw std::domain_error("h_rate requires x > 0");
  if (x > 0.5) return kNegInf;
  if (x == 0.5) return -std::numbers::ln2;
  return -(x + 0.5) * std::log1p(2.0 * x) - (0.5 - x) * std::log1p(-2.0 * x);
}

RateDiagnostic cramer_prelimit(std::int64_t N, double x) {
  if (N < 1) throw std::domain_error("cramer_prelimit requires N >= 1");
  if (!(x > 0.0)) throw std::domain_error("cramer_prelimit requires x > 0");
  const std::int64_t m = round_half_away(x * 2.0 * static_cast<double>(N));
  if (m < 1) throw std::domain_error("cramer_prelimit: 2N*x rounds to height 0");
  RateDiagnostic d;
  d.N = N;
  d.n = 2 * N;
  d.x = x;
  d.m = m;
  d.limit = h_rate(x);
  const double scale = 1.0 / (2.0 * static_cast<double>(N));
  if (m > N) {
    d.impossible = true;
    d.prelimit = kNegInf;
  } else if (m == N) {
    d.boundary_event = true;
    d.prelimit = scale * -log_of(catalan(N));
  } else {
    d.prelimit = scale * upper_tail_prob_exact(N, m);
  }
  d.gap = gap_between(d.prelimit, d.limit);
  return d;
}

}  // namespace dyckmax
