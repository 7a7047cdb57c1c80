#pragma once

// Exact uniform sampling from the Dyck paths of length 2N.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "dyckmax/bigcount.hpp"
#include "dyckmax/dyck_path.hpp"

namespace dyckmax {

/// Completion counts b(r, h): nonnegative paths of r steps from height h to
/// height 0, no upper barrier. Immutable after construction; safe to share
/// between threads that own separate RandomStreams.
class SamplerTable {
 public:
  explicit SamplerTable(std::int64_t N);

  std::int64_t half_length() const noexcept { return N_; }

  /// b(r, h), zero outside the reachable triangle.
  const BigCount& completions(std::int64_t r, std::int64_t h) const;

 private:
  std::int64_t N_;
  // rows_[r][h / 2] holds b(r, h) for h = r mod 2, h <= min(r, N).
  std::vector<std::vector<BigCount>> rows_;
  BigCount zero_ = 0;
};

SamplerTable build_sampler(std::int64_t N);

/// Seeded 64-bit Mersenne twister with an exact uniform big-integer draw.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, bound), by rejection on the bit length of bound.
  BigCount uniform_below(const BigCount& bound);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// A uniform path of length 2N. Draws one integer U < C_N and unranks it:
/// at height h with r steps left the path goes up iff U < b(r-1, h+1),
/// so each step is up with probability exactly b(r-1, h+1) / b(r, h).
DyckPath sample_path(const SamplerTable& table, RandomStream& rng);

struct BoundedSample {
  DyckPath path;
  std::uint64_t attempts = 0;  // draws until max < n was accepted
};

/// Uniform on paths with max < n, by rejection from the unbounded sampler.
/// Throws std::runtime_error after max_attempts rejections.
BoundedSample sample_path_below(const SamplerTable& table, std::int64_t n, RandomStream& rng,
                                std::uint64_t max_attempts = 1'000'000);

/// Exact probability the sampler assigns to `path`: the product of its
/// conditional step probabilities.
BigRatio path_probability(const SamplerTable& table, const DyckPath& path);

/// Counts of the sampled maximum, keyed by height 1..N (zeros included).
std::map<std::int64_t, std::uint64_t> max_histogram(const SamplerTable& table, std::uint64_t draws,
                                                    RandomStream& rng);

/// Relative frequencies of the sampled maximum; sums to 1.
std::map<std::int64_t, double> empirical_max_distribution(const SamplerTable& table, std::uint64_t draws,
                                                          RandomStream& rng);

namespace stats {

/// Pearson statistic sum (obs - exp)^2 / exp.
double chi_squared_statistic(std::span<const std::uint64_t> observed, std::span<const double> expected);

/// Upper critical value of chi-squared with `dof` degrees of freedom.
double chi_squared_critical(double dof, double significance);

/// sup_h |F_emp(h) - F_exact(h)| for distributions over the same ordered keys.
double ks_distance(std::span<const double> empirical_pmf, std::span<const double> exact_pmf);

/// Asymptotic Kolmogorov threshold sqrt(-ln(alpha/2)/2) / sqrt(n).
double ks_critical(double significance, std::uint64_t draws);

}  // namespace stats

}  // namespace dyckmax
