#include "dyckmax/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "dyckmax/exact_counts.hpp"

namespace dyckmax {

SamplerTable::SamplerTable(std::int64_t N) : N_(N) {
  if (N < 1) throw std::domain_error("sampler requires N >= 1");
  rows_.resize(static_cast<std::size_t>(2 * N + 1));
  rows_[0].assign(1, BigCount(1));
  for (std::int64_t r = 1; r <= 2 * N; ++r) {
    const std::int64_t top = std::min(r, N);
    auto& row = rows_[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>((top - (r & 1)) / 2 + 1));
    for (std::int64_t h = r & 1; h <= top; h += 2) {
      BigCount& cell = row[static_cast<std::size_t>(h / 2)];
      cell = completions(r - 1, h + 1);
      if (h > 0) cell += completions(r - 1, h - 1);
    }
  }
  if (completions(2 * N, 0) != catalan(N)) throw std::logic_error("sampler table does not total C_N");
}

const BigCount& SamplerTable::completions(std::int64_t r, std::int64_t h) const {
  if (r < 0 || r > 2 * N_ || h < 0 || h > std::min(r, N_) || ((r ^ h) & 1)) return zero_;
  const auto& row = rows_[static_cast<std::size_t>(r)];
  const auto idx = static_cast<std::size_t>(h / 2);
  return idx < row.size() ? row[idx] : zero_;
}

SamplerTable build_sampler(std::int64_t N) { return SamplerTable(N); }

BigCount RandomStream::uniform_below(const BigCount& bound) {
  if (sgn(bound) <= 0) throw std::domain_error("uniform_below requires a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned spare = static_cast<unsigned>(words * 64 - bits);
  std::vector<std::uint64_t> buf(words);
  BigCount out;
  for (;;) {
    for (auto& w : buf) w = engine_();
    buf.back() >>= spare;  // most significant word (least-first order below)
    mpz_import(out.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    if (out < bound) return out;
  }
}

DyckPath sample_path(const SamplerTable& table, RandomStream& rng) {
  const std::int64_t N = table.half_length();
  BigCount rank = rng.uniform_below(table.completions(2 * N, 0));
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * N));
  std::int64_t h = 0;
  for (std::int64_t r = 2 * N; r > 0; --r) {
    const BigCount& up = table.completions(r - 1, h + 1);
    if (rank < up) {
      steps.push_back(Step::up);
      ++h;
    } else {
      rank -= up;
      steps.push_back(Step::down);
      --h;
    }
  }
  return DyckPath(std::move(steps));
}

BoundedSample sample_path_below(const SamplerTable& table, std::int64_t n, RandomStream& rng,
                                std::uint64_t max_attempts) {
  if (n < 1) throw std::domain_error("height cap n must be >= 1");
  if (table.half_length() >= 1 && n == 1) throw std::domain_error("no Dyck path of positive length has max < 1");
  BoundedSample out;
  while (out.attempts < max_attempts) {
    ++out.attempts;
    DyckPath p = sample_path(table, rng);
    if (p.max_height() < n) {
      out.path = std::move(p);
      return out;
    }
  }
  throw std::runtime_error("sample_path_below: rejection limit reached");
}

BigRatio path_probability(const SamplerTable& table, const DyckPath& path) {
  const std::int64_t N = path.half_length();
  if (N != table.half_length()) throw std::invalid_argument("path length does not match the sampler table");
  BigRatio prob = 1;
  std::int64_t h = 0;
  std::int64_t r = 2 * N;
  for (Step s : path.steps()) {
    const std::int64_t next = h + static_cast<std::int64_t>(s);
    prob *= BigRatio(table.completions(r - 1, next), table.completions(r, h));
    prob.canonicalize();
    h = next;
    --r;
  }
  return prob;
}

std::map<std::int64_t, std::uint64_t> max_histogram(const SamplerTable& table, std::uint64_t draws,
                                                    RandomStream& rng) {
  if (draws < 1) throw std::domain_error("draws must be >= 1");
  std::map<std::int64_t, std::uint64_t> hist;
  for (std::int64_t h = 1; h <= table.half_length(); ++h) hist[h] = 0;
  for (std::uint64_t i = 0; i < draws; ++i) ++hist[sample_path(table, rng).max_height()];
  return hist;
}

std::map<std::int64_t, double> empirical_max_distribution(const SamplerTable& table, std::uint64_t draws,
                                                          RandomStream& rng) {
  std::map<std::int64_t, double> freq;
  for (const auto& [h, c] : max_histogram(table, draws, rng)) {
    freq[h] = static_cast<double>(c) / static_cast<double>(draws);
  }
  return freq;
}

namespace stats {

double chi_squared_statistic(std::span<const std::uint64_t> observed, std::span<const double> expected) {
  if (observed.size() != expected.size()) throw std::invalid_argument("observed/expected size mismatch");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected[i] > 0.0)) throw std::invalid_argument("expected counts must be positive");
    const double d = static_cast<double>(observed[i]) - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

double chi_squared_critical(double dof, double significance) {
  boost::math::chi_squared dist(dof);
  return boost::math::quantile(boost::math::complement(dist, significance));
}

double ks_distance(std::span<const double> empirical_pmf, std::span<const double> exact_pmf) {
  if (empirical_pmf.size() != exact_pmf.size()) throw std::invalid_argument("pmf size mismatch");
  double fe = 0.0;
  double fx = 0.0;
  double sup = 0.0;
  for (std::size_t i = 0; i < exact_pmf.size(); ++i) {
    fe += empirical_pmf[i];
    fx += exact_pmf[i];
    sup = std::max(sup, std::abs(fe - fx));
  }
  return sup;
}

double ks_critical(double significance, std::uint64_t draws) {
  return std::sqrt(-0.5 * std::log(significance / 2.0)) / std::sqrt(static_cast<double>(draws));
}

}  // namespace stats

}  // namespace dyckmax
