#pragma once

// Deviation rates for the maximum of a uniform Dyck path, and finite-N
// diagnostics comparing exact normalized log-probabilities with the rates.
//
// Upper-tail events use integer heights and strict inequality:
// "max > m" is max >= m + 1.

#include <cstdint>

#include "dyckmax/bigcount.hpp"

namespace dyckmax {

struct RateDiagnostic {
  std::int64_t N = 0;
  std::int64_t n = 0;
  double x = 0.0;
  std::int64_t m = 0;     // integer height used for the event, 0 if unused
  double prelimit = 0.0;  // normalized finite-N log-probability
  double limit = 0.0;     // rate-function value
  double gap = 0.0;       // |prelimit - limit|; 0 when both are -inf
  bool impossible = false;      // probability exactly 0, prelimit is -inf
  bool outside_regime = false;  // parameters outside the regime of the rate
  bool extrapolated = false;    // rate used beyond the range it was derived on
  bool boundary_event = false;  // event replaced by max >= N (single path)
};

/// Reflection bounds bracketing #{Dyck paths of length 2N with max > m}.
struct ReflectionSandwich {
  std::int64_t N = 0;
  std::int64_t m = 0;
  std::int64_t lower_level = 0;  // level used for the midpoint-peak count
  BigCount lower;                // count_peak_at_midpoint(N, lower_level), 0 if none
  BigCount exceed;               // exact count with max > m
  BigCount upper;                // count_touch_upper_bound(N, m + 1)
  bool holds = false;            // lower <= exceed <= upper, exact comparison
};

/// Round half away from zero.
std::int64_t round_half_away(double v);

/// Moderate-deviation prelimit (n+1)^2/N log P(max < n) with limit -pi^2.
/// Requires N >= 1 and n >= 2.
RateDiagnostic md_rate_prelimit(std::int64_t N, std::int64_t n);

/// log(4 pi^{3/2} N^{3/2} / (n+1)^3) - pi^2 N / (n+1)^2.
double md_asymptotic_log(std::int64_t N, std::int64_t n);

/// Exact number of Dyck paths of length 2N with max > m.
BigCount upper_tail_count(std::int64_t N, std::int64_t m);

/// log P_N(max > m) from exact counts; -inf when m >= N (probability 0).
/// Requires m >= 1.
double upper_tail_prob_exact(std::int64_t N, std::int64_t m);

ReflectionSandwich reflection_sandwich(std::int64_t N, std::int64_t m);

/// Gaussian-regime prelimit N/(2n^2) log P(max > m), m = round(x n), with
/// limit -x^2. Flags outside_regime unless n <= N <= n^2.
RateDiagnostic ld_gaussian_prelimit(std::int64_t N, std::int64_t n, double x);

/// N/n^2 log P(max > n) with limit -2 (the x = 1 case). Always flagged
/// extrapolated.
RateDiagnostic ld_unit_prelimit(std::int64_t N, std::int64_t n);

/// h(x) = -(x+1/2) log(1+2x) - (1/2-x) log(1-2x) on (0, 1/2), -log 2 at 1/2,
/// -inf beyond. Throws std::domain_error for x <= 0.
double h_rate(double x);

/// Cramer-regime prelimit (1/2N) log P(max > m), m = round(2N x), limit h(x).
/// When m = N the event is replaced by max >= N, whose probability is 1/C_N.
RateDiagnostic cramer_prelimit(std::int64_t N, double x);

}  // namespace dyckmax
