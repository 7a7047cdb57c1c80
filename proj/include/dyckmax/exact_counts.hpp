#pragma once

// Exact combinatorics of Dyck paths with a bounded maximum.
//
// Convention used everywhere: a height cap n means max < n (strict). A
// "max <= h" quantity is count_bounded(N, h + 1).

#include <cstdint>
#include <map>
#include <vector>

#include "dyckmax/bigcount.hpp"
#include "dyckmax/dyck_path.hpp"

namespace dyckmax {

inline constexpr std::int64_t kMaxEnumerationN = 10;

/// C_N = (2N)! / (N! (N+1)!).
BigCount catalan(std::int64_t N);

/// |D_{2N,n}|, the number of Dyck paths of length 2N with max height < n,
/// by the row-by-row DP over heights 0..n-1.
BigCount count_bounded(std::int64_t N, std::int64_t n);

/// count_bounded(N, n) for every N = 0..max_N from a single DP sweep.
std::vector<BigCount> count_bounded_series(std::int64_t max_N, std::int64_t n);

/// (T^{2N})_{11} for the n x n path-graph adjacency matrix T, by exact
/// repeated squaring. Independent of the DP; must agree with it.
BigCount count_bounded_matrix(std::int64_t N, std::int64_t n);

/// All Dyck paths of length 2N, no duplicates, ordered with D before U at
/// each branch. Rejects N > 10.
std::vector<DyckPath> enumerate_paths(std::int64_t N);

/// Number of Dyck paths of length 2N whose maximum is exactly h, h = 1..N.
std::map<std::int64_t, BigCount> max_height_pmf(std::int64_t N);

/// [binom(N,(N+m)/2) - binom(N,(N+m)/2+1)]^2: Dyck paths of length 2N at
/// height m after N steps. Requires N + m even and 0 <= m <= N.
BigCount count_peak_at_midpoint(std::int64_t N, std::int64_t m);

/// 2 binom(2N, N+m): reflection upper bound on paths from the origin that
/// touch level m within 2N steps.
BigCount count_touch_upper_bound(std::int64_t N, std::int64_t m);

/// DP table c(i, h) of admissible prefixes of length i ending at height h,
/// 0 <= h < height_cap. Keeps two rows unless full retention is requested.
class BoundedCountTable {
 public:
  BoundedCountTable(std::int64_t N, std::int64_t height_cap, bool retain_all_rows = false);

  std::int64_t half_length() const noexcept { return N_; }
  std::int64_t height_cap() const noexcept { return cap_; }
  bool retains_all_rows() const noexcept { return retain_; }

  /// c(i, h). With two-row retention only i = 2N (the final row) is available.
  const BigCount& at(std::int64_t i, std::int64_t h) const;

  /// c(2N, 0) = |D_{2N,n}|.
  const BigCount& total() const { return at(2 * N_, 0); }

 private:
  std::int64_t N_;
  std::int64_t cap_;
  bool retain_;
  std::vector<std::vector<BigCount>> rows_;  // all 2N+1 rows, or just the last
  BigCount zero_ = 0;
};

}  // namespace dyckmax
