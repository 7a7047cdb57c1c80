#include "dyckmax/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dyckmax::kernels {

namespace {

void check_dims(std::int64_t N, std::int64_t cap) {
  if (N < 0) throw std::domain_error("half-length N must be >= 0");
  if (cap < 1) throw std::domain_error("height cap n must be >= 1");
}

// Reachable band of heights after `step` steps: same parity as `step`,
// at most `step`, at most `remaining`, below `width`.
struct Band {
  std::int64_t lo;
  std::int64_t hi;  // inclusive; hi < lo means empty
};

Band band_at(std::int64_t step, std::int64_t remaining, std::int64_t width) {
  const std::int64_t lo = step & 1;
  std::int64_t hi = std::min({step, remaining, width - 1});
  if ((hi & 1) != lo) --hi;
  return {lo, hi};
}

// next[h] = prev[h-1] + prev[h+1], reading prev only inside `from`.
inline void update_cell(std::vector<BigCount>& next, const std::vector<BigCount>& prev,
                        std::int64_t h, Band from) {
  const bool has_below = h - 1 >= from.lo && h - 1 <= from.hi;
  const bool has_above = h + 1 <= from.hi;
  mpz_ptr dst = next[static_cast<std::size_t>(h)].get_mpz_t();
  if (has_below && has_above) {
    mpz_add(dst, prev[static_cast<std::size_t>(h - 1)].get_mpz_t(),
            prev[static_cast<std::size_t>(h + 1)].get_mpz_t());
  } else if (has_below) {
    mpz_set(dst, prev[static_cast<std::size_t>(h - 1)].get_mpz_t());
  } else if (has_above) {
    mpz_set(dst, prev[static_cast<std::size_t>(h + 1)].get_mpz_t());
  } else {
    mpz_set_ui(dst, 0);
  }
}

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

}  // namespace

BigCount bounded_excursions_serial(std::int64_t N, std::int64_t cap) {
  check_dims(N, cap);
  const std::int64_t steps = 2 * N;
  const std::int64_t width = std::min(cap, N + 1);
  std::vector<BigCount> rows[2] = {std::vector<BigCount>(width), std::vector<BigCount>(width)};
  rows[0][0] = 1;
  Band prev{0, 0};
  for (std::int64_t i = 0; i < steps; ++i) {
    const auto& cur = rows[i & 1];
    auto& next = rows[(i + 1) & 1];
    const Band band = band_at(i + 1, steps - (i + 1), width);
    for (std::int64_t h = band.lo; h <= band.hi; h += 2) update_cell(next, cur, h, prev);
    prev = band;
  }
  if (prev.hi < 0) return 0;
  return rows[steps & 1][0];
}

BigCount bounded_excursions_omp(std::int64_t N, std::int64_t cap) {
  check_dims(N, cap);
  const std::int64_t steps = 2 * N;
  const std::int64_t width = std::min(cap, N + 1);
  std::vector<BigCount> rows[2] = {std::vector<BigCount>(width), std::vector<BigCount>(width)};
  rows[0][0] = 1;
  bool empty = false;
#pragma omp parallel
  {
    Band prev{0, 0};
    for (std::int64_t i = 0; i < steps; ++i) {
      const auto& cur = rows[i & 1];
      auto& next = rows[(i + 1) & 1];
      const Band band = band_at(i + 1, steps - (i + 1), width);
      const std::int64_t cells = band.hi < band.lo ? 0 : (band.hi - band.lo) / 2 + 1;
#pragma omp for schedule(static)
      for (std::int64_t k = 0; k < cells; ++k) update_cell(next, cur, band.lo + 2 * k, prev);
      prev = band;
    }
#pragma omp single
    empty = prev.hi < 0;
  }
  if (empty) return 0;
  return rows[steps & 1][0];
}

std::vector<BigCount> bounded_excursion_series_serial(std::int64_t max_N, std::int64_t cap) {
  check_dims(max_N, cap);
  const std::int64_t steps = 2 * max_N;
  const std::int64_t width = std::min(cap, max_N + 1);
  std::vector<BigCount> rows[2] = {std::vector<BigCount>(width), std::vector<BigCount>(width)};
  std::vector<BigCount> out(static_cast<std::size_t>(max_N + 1));
  rows[0][0] = 1;
  out[0] = 1;
  Band prev{0, 0};
  for (std::int64_t i = 0; i < steps; ++i) {
    const auto& cur = rows[i & 1];
    auto& next = rows[(i + 1) & 1];
    const Band band = band_at(i + 1, kUnbounded, width);
    for (std::int64_t h = band.lo; h <= band.hi; h += 2) update_cell(next, cur, h, prev);
    prev = band;
    if (((i + 1) & 1) == 0) out[static_cast<std::size_t>((i + 1) / 2)] = next[0];
  }
  return out;
}

std::vector<BigCount> bounded_excursion_series_omp(std::int64_t max_N, std::int64_t cap) {
  check_dims(max_N, cap);
  const std::int64_t steps = 2 * max_N;
  const std::int64_t width = std::min(cap, max_N + 1);
  std::vector<BigCount> rows[2] = {std::vector<BigCount>(width), std::vector<BigCount>(width)};
  std::vector<BigCount> out(static_cast<std::size_t>(max_N + 1));
  rows[0][0] = 1;
  out[0] = 1;
#pragma omp parallel
  {
    Band prev{0, 0};
    for (std::int64_t i = 0; i < steps; ++i) {
      const auto& cur = rows[i & 1];
      auto& next = rows[(i + 1) & 1];
      const Band band = band_at(i + 1, kUnbounded, width);
      const std::int64_t cells = band.hi < band.lo ? 0 : (band.hi - band.lo) / 2 + 1;
#pragma omp for schedule(static)
      for (std::int64_t k = 0; k < cells; ++k) update_cell(next, cur, band.lo + 2 * k, prev);
      prev = band;
      if (((i + 1) & 1) == 0) {
#pragma omp single
        out[static_cast<std::size_t>((i + 1) / 2)] = next[0];
      }
    }
  }
  return out;
}

namespace {

void check_spectral(std::int64_t N, std::int64_t n, std::span<double> out) {
  if (N < 0) throw std::domain_error("half-length N must be >= 0");
  if (n < 1) throw std::domain_error("height cap n must be >= 1");
  if (out.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("output span must hold n terms");
}

// s and n+1-s share |cos| and sin; evaluating at the smaller index keeps the
// cosine argument in [0, pi/2] where it is computed most accurately.
inline std::int64_t folded(std::int64_t s, std::int64_t n) { return std::min(s, n + 1 - s); }

inline double spectral_term(std::int64_t N, std::int64_t n, std::int64_t s) {
  const std::int64_t k = folded(s, n);
  const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1);
  if (2 * k == n + 1) return N == 0 ? 2.0 / static_cast<double>(n + 1) : 0.0;
  const double sn = std::sin(theta);
  return 2.0 / static_cast<double>(n + 1) * sn * sn * std::pow(2.0 * std::cos(theta), 2.0 * static_cast<double>(N));
}

inline double log_spectral_term(std::int64_t N, std::int64_t n, std::int64_t s) {
  const std::int64_t k = folded(s, n);
  const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1);
  const double base = std::log(2.0 / static_cast<double>(n + 1)) + 2.0 * std::log(std::sin(theta));
  if (N == 0) return base;
  if (2 * k == n + 1) return -std::numeric_limits<double>::infinity();
  return base + 2.0 * static_cast<double>(N) * std::log(2.0 * std::cos(theta));
}

}  // namespace

void spectral_terms_serial(std::int64_t N, std::int64_t n, std::span<double> out) {
  check_spectral(N, n, out);
  for (std::int64_t s = 1; s <= n; ++s) out[static_cast<std::size_t>(s - 1)] = spectral_term(N, n, s);
}

void spectral_terms_omp(std::int64_t N, std::int64_t n, std::span<double> out) {
  check_spectral(N, n, out);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 1; s <= n; ++s) out[static_cast<std::size_t>(s - 1)] = spectral_term(N, n, s);
}

void log_spectral_terms_serial(std::int64_t N, std::int64_t n, std::span<double> out) {
  check_spectral(N, n, out);
  for (std::int64_t s = 1; s <= n; ++s) out[static_cast<std::size_t>(s - 1)] = log_spectral_term(N, n, s);
}

void log_spectral_terms_omp(std::int64_t N, std::int64_t n, std::span<double> out) {
  check_spectral(N, n, out);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 1; s <= n; ++s) out[static_cast<std::size_t>(s - 1)] = log_spectral_term(N, n, s);
}

}  // namespace dyckmax::kernels
