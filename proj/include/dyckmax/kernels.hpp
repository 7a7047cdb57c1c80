#pragma once

// Data-parallel inner loops. Every kernel has a serial reference with the
// same signature; the OpenMP variant must produce identical results (exact
// for big-int kernels, bitwise for the per-term floating kernels).

#include <cstdint>
#include <span>
#include <vector>

#include "dyckmax/bigcount.hpp"

namespace dyckmax::kernels {

// Number of excursions of 2N steps whose heights all stay below `cap`.
// Rows are pruned to heights reachable from and returnable to 0.
BigCount bounded_excursions_serial(std::int64_t N, std::int64_t cap);
BigCount bounded_excursions_omp(std::int64_t N, std::int64_t cap);

// Same DP run once to 2*max_N steps; element N of the result is the count
// for half-length N (0 <= N <= max_N).
std::vector<BigCount> bounded_excursion_series_serial(std::int64_t max_N, std::int64_t cap);
std::vector<BigCount> bounded_excursion_series_omp(std::int64_t max_N, std::int64_t cap);

// out[s-1] = (2/(n+1)) sin^2(pi s/(n+1)) (2 cos(pi s/(n+1)))^{2N}, s = 1..n.
// out.size() must equal n.
void spectral_terms_serial(std::int64_t N, std::int64_t n, std::span<double> out);
void spectral_terms_omp(std::int64_t N, std::int64_t n, std::span<double> out);

// Natural logs of the same terms; -inf where cos vanishes (odd n, s = (n+1)/2).
void log_spectral_terms_serial(std::int64_t N, std::int64_t n, std::span<double> out);
void log_spectral_terms_omp(std::int64_t N, std::int64_t n, std::span<double> out);

}  // namespace dyckmax::kernels
