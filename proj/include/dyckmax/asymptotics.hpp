#pragma once

// Limit law of the scaled maximum, max / sqrt(2N), of a uniform Dyck path:
// the theta series f and the Kennedy/Chung series K, which coincide.

#include <cstdint>
#include <span>
#include <vector>

namespace dyckmax {

/// Truncation policy for the infinite series. A sum stops after S terms only
/// once a certified bound on the remainder is below abs_tol.
struct SeriesSpec {
  double abs_tol = 1e-14;
  int max_terms = 100000;
  int min_terms = 0;  // forces at least this many terms (truncation checks)
};

struct LimitEval {
  double arg = 0.0;         // x or t
  double value = 0.0;       // reported value, clamped to >= 0
  double raw = 0.0;         // unclamped truncated sum
  int terms_used = 0;
  double tail_bound = 0.0;  // certified bound on |value - limit series|
};

/// Bound on sum_{s>S} s^2 exp(-a s^2); +inf when the geometric domination
/// does not hold yet at S.
double squared_gaussian_tail(double a, long S);

/// Bound on sum_{s>S} exp(-a s^2).
double gaussian_tail(double a, long S);

/// f(t) = 4 sqrt(pi) t^{3/2} sum_s s^2 pi^2 exp(-t s^2 pi^2), t > 0.
LimitEval f_of_t(double t, const SeriesSpec& spec = {});

/// f(x) = sqrt(2 pi) x^{-3} sum_s s^2 pi^2 exp(-pi^2 s^2 / (2 x^2)), x > 0.
/// Converges fastest for small x.
LimitEval f_of_x(double x, const SeriesSpec& spec = {});

/// K(x) = 1 - 2 sum_s (4 x^2 s^2 - 1) exp(-2 x^2 s^2), x > 0.
/// Converges fastest for large x.
LimitEval k_of_x(double x, const SeriesSpec& spec = {});

/// The distribution function of the limit law, through f for x < 1 and
/// through K otherwise.
LimitEval limit_cdf(double x, const SeriesSpec& spec = {});

/// |x(1 + 2 sum e^{-2n^2x^2}) - sqrt(pi/2)(1 + 2 sum e^{-pi^2k^2/(2x^2)})|,
/// both sides truncated under `spec`. The derivative in x of this identity is
/// f = K.
double jacobi_identity_residual(double x, const SeriesSpec& spec = {});

/// Height cap n = ceil(x sqrt(2N)). Products within 1e-9 (relative) of an
/// integer are snapped to it so decimal grids such as x = 1.4 map as written.
std::int64_t scaled_height_cap(std::int64_t N, double x);

struct PrelimitPoint {
  std::int64_t N = 0;
  double x = 0.0;
  std::int64_t n = 0;         // scaled_height_cap(N, x)
  double probability = 0.0;   // exact P_N(max < n), rounded once to double
  double limit = 0.0;         // limit_cdf(x)
  double gap = 0.0;
};

/// Exact finite-N probabilities against the limit law on a grid of x.
/// Grid points run in parallel; output follows input order.
std::vector<PrelimitPoint> prelimit_cdf(std::int64_t N, std::span<const double> xs,
                                        const SeriesSpec& spec = {});

}  // namespace dyckmax
