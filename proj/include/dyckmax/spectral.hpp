#pragma once

// Spectral evaluation of bounded Dyck path counts through the eigenvalues
// 2cos(pi k/(n+1)) of the path-graph adjacency matrix.

#include <cstdint>
#include <span>
#include <vector>

namespace dyckmax {

/// Largest N accepted by spectral_count. 4^N must stay 64 binary orders
/// below the largest finite double.
inline constexpr std::int64_t kMaxDirectSpectralN = 480;

struct SpectralSum {
  std::int64_t N = 0;
  std::int64_t n = 0;
  std::vector<double> terms;  // terms[s-1], s = 1..n, all >= 0
  double total = 0.0;
};

/// 2cos(pi k/(n+1)), k = 1..n: strictly decreasing, symmetric about zero.
std::vector<double> eigenvalues(std::int64_t n);

/// G_{N,n}(s) = sin^2(pi s/(n+1)) cos^{2N}(pi s/(n+1)), in [0, 1].
double g_term(std::int64_t N, std::int64_t n, std::int64_t s);

/// log G_{N,n}(s); -inf when the cosine vanishes and N >= 1.
double log_g_term(std::int64_t N, std::int64_t n, std::int64_t s);

/// All n terms of the spectral sum and their total. Symmetric pairs are
/// added first and pairs are accumulated smallest-first.
SpectralSum spectral_sum(std::int64_t N, std::int64_t n);

/// |D_{2N,n}| as a double via the spectral sum. Throws std::range_error for
/// N > kMaxDirectSpectralN; use log_spectral_ratio there.
double spectral_count(std::int64_t N, std::int64_t n);

/// log C_N through lgamma.
double log_catalan(std::int64_t N);

/// log(|D_{2N,n}| / C_N) by log-sum-exp over the log spectral terms,
/// without forming 4^N. Valid for any N >= 0.
double log_spectral_ratio(std::int64_t N, std::int64_t n);

/// log( sum_{s=2}^{n-1} G(s) / G(1) ), evaluated in log space. Tends to -inf
/// as N grows at fixed n. Requires n >= 3.
double log_dominance_ratio(std::int64_t N, std::int64_t n);

/// cos(x) <= exp(-x^2/2) + unit roundoff at every point. Throws
/// std::domain_error for points outside [0, pi/2].
bool cosine_bound_check(std::span<const double> grid);

/// log sum exp(values), skipping -inf entries; -inf if all are -inf.
double log_sum_exp(std::span<const double> values);

}  // namespace dyckmax
