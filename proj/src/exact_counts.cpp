#include "dyckmax/exact_counts.hpp"

#include <stdexcept>
#include <string>

#include "dyckmax/kernels.hpp"

namespace dyckmax {

namespace {

void require_half_length(std::int64_t N) {
  if (N < 0) throw std::domain_error("half-length N must be >= 0");
}

void require_cap(std::int64_t n) {
  if (n < 1) throw std::domain_error("height cap n must be >= 1");
}

using Matrix = std::vector<BigCount>;  // row-major, dim x dim

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t dim) {
  Matrix c(dim * dim);
  BigCount tmp;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const BigCount& aik = a[i * dim + k];
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        mpz_addmul(c[i * dim + j].get_mpz_t(), aik.get_mpz_t(), b[k * dim + j].get_mpz_t());
      }
    }
  }
  return c;
}

void enumerate_rec(std::vector<Step>& prefix, std::int64_t height, std::int64_t remaining,
                   std::vector<DyckPath>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (height > 0) {
    prefix.push_back(Step::down);
    enumerate_rec(prefix, height - 1, remaining - 1, out);
    prefix.pop_back();
  }
  if (height + 1 <= remaining - 1) {
    prefix.push_back(Step::up);
    enumerate_rec(prefix, height + 1, remaining - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

BigCount catalan(std::int64_t N) {
  require_half_length(N);
  BigCount c = binomial(2 * N, N);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(N + 1));
  return c;
}

BigCount count_bounded(std::int64_t N, std::int64_t n) {
  require_half_length(N);
  require_cap(n);
  return kernels::bounded_excursions_omp(N, n);
}

std::vector<BigCount> count_bounded_series(std::int64_t max_N, std::int64_t n) {
  require_half_length(max_N);
  require_cap(n);
  return kernels::bounded_excursion_series_omp(max_N, n);
}

BigCount count_bounded_matrix(std::int64_t N, std::int64_t n) {
  require_half_length(N);
  require_cap(n);
  const auto dim = static_cast<std::size_t>(n);
  Matrix result(dim * dim);
  Matrix base(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    result[i * dim + i] = 1;
    if (i + 1 < dim) {
      base[i * dim + i + 1] = 1;
      base[(i + 1) * dim + i] = 1;
    }
  }
  // T^{2N} = (T^2)^N
  base = multiply(base, base, dim);
  for (auto e = static_cast<std::uint64_t>(N); e > 0; e >>= 1) {
    if (e & 1u) result = multiply(result, base, dim);
    if (e > 1) base = multiply(base, base, dim);
  }
  return result[0];
}

std::vector<DyckPath> enumerate_paths(std::int64_t N) {
  require_half_length(N);
  if (N > kMaxEnumerationN) {
    throw std::length_error("enumerate_paths: N = " + std::to_string(N) + " exceeds the size limit " +
                            std::to_string(kMaxEnumerationN));
  }
  std::vector<DyckPath> out;
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>(2 * N));
  enumerate_rec(prefix, 0, 2 * N, out);
  return out;
}

std::map<std::int64_t, BigCount> max_height_pmf(std::int64_t N) {
  if (N < 1) throw std::domain_error("max_height_pmf requires N >= 1");
  // below[h] = count_bounded(N, h) for h = 1..N+1; independent DPs.
  std::vector<BigCount> below(static_cast<std::size_t>(N + 2));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t h = 1; h <= N + 1; ++h) {
    below[static_cast<std::size_t>(h)] = kernels::bounded_excursions_serial(N, h);
  }
  std::map<std::int64_t, BigCount> pmf;
  for (std::int64_t h = 1; h <= N; ++h) {
    pmf[h] = below[static_cast<std::size_t>(h + 1)] - below[static_cast<std::size_t>(h)];
  }
  return pmf;
}

BigCount count_peak_at_midpoint(std::int64_t N, std::int64_t m) {
  if (N < 1) throw std::domain_error("count_peak_at_midpoint requires N >= 1");
  if (m < 0 || m > N) throw std::domain_error("count_peak_at_midpoint requires 0 <= m <= N");
  if ((N + m) % 2 != 0) {
    throw std::domain_error("count_peak_at_midpoint: N + m must be even (a lattice path of N steps ends at a height "
                            "with the parity of N)");
  }
  const std::int64_t ups = (N + m) / 2;
  BigCount ballot = binomial(N, ups) - binomial(N, ups + 1);
  return ballot * ballot;
}

BigCount count_touch_upper_bound(std::int64_t N, std::int64_t m) {
  if (N < 1) throw std::domain_error("count_touch_upper_bound requires N >= 1");
  if (m < 1 || m > N) throw std::domain_error("count_touch_upper_bound requires 1 <= m <= N");
  return 2 * binomial(2 * N, N + m);
}

BoundedCountTable::BoundedCountTable(std::int64_t N, std::int64_t height_cap, bool retain_all_rows)
    : N_(N), cap_(height_cap), retain_(retain_all_rows) {
  require_half_length(N);
  require_cap(height_cap);
  const auto width = static_cast<std::size_t>(height_cap);
  std::vector<BigCount> cur(width);
  std::vector<BigCount> next(width);
  cur[0] = 1;
  if (retain_) rows_.push_back(cur);
  for (std::int64_t i = 0; i < 2 * N; ++i) {
    for (std::size_t h = 0; h < width; ++h) {
      next[h] = 0;
      if (h > 0) next[h] += cur[h - 1];
      if (h + 1 < width) next[h] += cur[h + 1];
    }
    std::swap(cur, next);
    if (retain_) rows_.push_back(cur);
  }
  if (!retain_) rows_.push_back(std::move(cur));
}

const BigCount& BoundedCountTable::at(std::int64_t i, std::int64_t h) const {
  if (i < 0 || i > 2 * N_) throw std::out_of_range("row index outside 0..2N");
  if (h < 0) throw std::out_of_range("height must be >= 0");
  if (h >= cap_) return zero_;
  if (retain_) return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)];
  if (i != 2 * N_) throw std::out_of_range("two-row table only exposes the final row");
  return rows_.back()[static_cast<std::size_t>(h)];
}

}  // namespace dyckmax
