#include "dyckmax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dyckmax/asymptotics.hpp"
#include "dyckmax/deviations.hpp"
#include "dyckmax/exact_counts.hpp"
#include "dyckmax/spectral.hpp"

namespace dyckmax {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult check(const std::string& suite, const std::string& name, double measured, double tolerance,
                  bool strict_less = true) {
  const bool ok = strict_less ? measured < tolerance : measured <= tolerance;
  return {suite, name, ok, measured, tolerance};
}

void oracle_suite(std::vector<CheckResult>& out) {
  const std::string s = "oracle";
  double mismatches = 0;
  for (std::int64_t N = 0; N <= 8; ++N) {
    const auto paths = enumerate_paths(N);
    for (std::int64_t n = 1; n <= N + 2; ++n) {
      const auto brute = std::count_if(paths.begin(), paths.end(), [n](const DyckPath& p) { return p.max_height() < n; });
      const BigCount dp = count_bounded(N, n);
      if (dp != brute || count_bounded_matrix(N, n) != dp) ++mismatches;
    }
  }
  out.push_back(check(s, "three-way count equality N<=8", mismatches, 0, false));

  double violations = 0;
  for (std::int64_t n = 1; n <= 32; ++n) {
    const auto lo = count_bounded_series(30, n);
    const auto hi = count_bounded_series(30, n + 1);
    for (std::int64_t N = 0; N <= 30; ++N) {
      const auto i = static_cast<std::size_t>(N);
      if (lo[i] > hi[i]) ++violations;
      if (n >= N + 1 && lo[i] != hi[i]) ++violations;
    }
  }
  out.push_back(check(s, "monotone in height cap", violations, 0, false));

  double bad_sums = 0;
  for (std::int64_t N = 1; N <= 40; ++N) {
    BigCount total = 0;
    for (const auto& [h, c] : max_height_pmf(N)) total += c;
    if (total != catalan(N)) ++bad_sums;
  }
  out.push_back(check(s, "max-height pmf sums to C_N, N<=40", bad_sums, 0, false));

  double cap_mismatches = 0;
  for (std::int64_t n : {1, 2, 7, 50, 101}) {
    const auto series = count_bounded_series(100, n);
    for (std::int64_t N = 0; N <= std::min<std::int64_t>(100, n - 1); ++N) {
      if (series[static_cast<std::size_t>(N)] != catalan(N)) ++cap_mismatches;
    }
  }
  out.push_back(check(s, "bounded count equals C_N when N <= n-1", cap_mismatches, 0, false));

  double tail = 0;
  for (std::int64_t N = 1; N <= 8; ++N) {
    const auto paths = enumerate_paths(N);
    for (std::int64_t m = 0; m < N; ++m) {
      const auto brute = std::count_if(paths.begin(), paths.end(), [m](const DyckPath& p) { return p.max_height() >= m + 1; });
      const BigCount exact = catalan(N) - count_bounded(N, m + 1);
      if (exact != brute || exact > count_touch_upper_bound(N, m + 1)) ++tail;
    }
  }
  out.push_back(check(s, "tail count bounded by reflection count", tail, 0, false));
}

void spectral_suite(std::vector<CheckResult>& out) {
  const std::string s = "spectral";
  double worst = 0.0;
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto exact = count_bounded_series(300, n);
    for (std::int64_t N = 1; N <= 300; ++N) {
      const BigCount& c = exact[static_cast<std::size_t>(N)];
      const double approx = spectral_count(N, n);
      const double err = sgn(c) == 0 ? std::abs(approx) : std::abs(approx - c.get_d()) / c.get_d();
      worst = std::max(worst, err);
    }
  }
  out.push_back(check(s, "spectral sum vs exact, N<=300 n<=60", worst, 1e-9));

  double log_worst = 0.0;
  for (std::int64_t N : {200, 500, 1000, 2000}) {
    const BigCount cat = catalan(N);
    for (std::int64_t n : {2, 5, 10, 20}) {
      log_worst = std::max(log_worst, std::abs(log_spectral_ratio(N, n) - log_ratio(count_bounded(N, n), cat)));
    }
  }
  out.push_back(check(s, "log-space ratio vs exact, N<=2000 n<=20", log_worst, 1e-6));

  double prev = std::numeric_limits<double>::infinity();
  double increases = 0;
  for (std::int64_t N : {1000, 10000, 100000}) {
    const double r = log_dominance_ratio(N, 10);
    if (!(r < prev)) ++increases;
    prev = r;
  }
  out.push_back(check(s, "G(1) dominates the interior terms as N grows", increases, 0, false));

  std::vector<double> grid(10000);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = (kPi / 2.0) * static_cast<double>(i) / (grid.size() - 1);
  out.push_back(check(s, "cos(x) <= exp(-x^2/2) on [0, pi/2]", cosine_bound_check(grid) ? 0 : 1, 0, false));
}

void identity_suite(std::vector<CheckResult>& out) {
  const std::string s = "identity";
  const SeriesSpec spec;
  double worst = 0.0;
  double resid = 0.0;
  for (int i = 3; i <= 30; ++i) {
    const double x = i / 10.0;
    worst = std::max(worst, std::abs(f_of_x(x, spec).raw - k_of_x(x, spec).raw));
    resid = std::max(resid, jacobi_identity_residual(x, spec));
  }
  out.push_back(check(s, "f(x) = K(x) on 0.3..3.0", worst, 1e-12));
  out.push_back(check(s, "Poisson summation residual", resid, 2 * spec.abs_tol));

  double axiom = 0;
  double prev_f = -1.0;
  double prev_k = -1.0;
  for (int i = 1; i <= 100; ++i) {
    const double x = 0.05 * i;
    const LimitEval fe = f_of_x(x, spec);
    const LimitEval ke = k_of_x(x, spec);
    const double f = fe.raw;
    const double k = ke.raw;
    // monotone up to truncation error and roundoff
    if (f < prev_f - 2 * fe.tail_bound - 1e-13 || k < prev_k - 2 * ke.tail_bound - 1e-13) ++axiom;
    if (f < -1e-12 || f > 1 + 1e-12 || k < -1e-12 || k > 1 + 1e-12) ++axiom;
    prev_f = f;
    prev_k = k;
  }
  if (f_of_x(0.05, spec).raw > 1e-12 || std::abs(k_of_x(5.0, spec).raw - 1.0) > 1e-12) ++axiom;
  out.push_back(check(s, "distribution-function axioms for f and K", axiom, 0, false));

  double cert = 0;
  for (int i = 1; i <= 40; ++i) {
    const double x = 0.1 * i;
    for (auto eval : {&f_of_x, &k_of_x}) {
      const LimitEval base = eval(x, spec);
      SeriesSpec doubled = spec;
      doubled.min_terms = 2 * base.terms_used;
      const double diff = std::abs(eval(x, doubled).raw - base.raw);
      if (diff > base.tail_bound + 4 * std::numeric_limits<double>::epsilon()) ++cert;
    }
  }
  out.push_back(check(s, "tail bounds certify truncation", cert, 0, false));

  const std::vector<double> xs = {0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8, 2.0};
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  double nonmono = 0;
  for (std::int64_t N : {500, 2000, 5000}) {
    double sup = 0.0;
    for (const auto& p : prelimit_cdf(N, xs, spec)) sup = std::max(sup, p.gap);
    if (!(sup < prev)) ++nonmono;
    prev = sup;
    last = sup;
  }
  out.push_back(check(s, "exact law approaches the limit (sup gap shrinks)", nonmono, 0, false));
  out.push_back(check(s, "sup gap to the limit at N=5000", last, 0.02));
}

void rates_suite(std::vector<CheckResult>& out) {
  const std::string s = "rates";
  double nonmono = 0;
  for (int i = 1; i < 100; ++i) {
    if (!(h_rate(0.005 * (i + 1)) < h_rate(0.005 * i))) ++nonmono;
  }
  out.push_back(check(s, "h strictly decreasing on (0, 1/2)", nonmono, 0, false));
  double cont = 0.0;
  double shrink = 0;
  double last_cont = std::numeric_limits<double>::infinity();
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    cont = std::abs(h_rate(0.5 - eps) + std::numbers::ln2);
    if (!(cont < last_cont)) ++shrink;
    last_cont = cont;
  }
  out.push_back(check(s, "h(1/2 - eps) shrinks toward -log 2", shrink, 0, false));
  out.push_back(check(s, "h(1/2 - 1e-6) near -log 2", cont, 1e-4));

  double cramer = 0.0;
  for (double x : {0.1, 0.2, 0.25, 0.3, 0.4}) cramer = std::max(cramer, cramer_prelimit(500, x).gap);
  out.push_back(check(s, "Cramer prelimit vs h(x) at N=500", cramer, 0.02));
  out.push_back(check(s, "(1/2N) log(1/C_N) vs -log 2 at N=500", cramer_prelimit(500, 0.5).gap, 0.01));
  out.push_back(check(s, "x > 1/2 is the -inf regime", cramer_prelimit(500, 0.6).impossible ? 0 : 1, 0, false));

  double sandwich = 0;
  for (std::int64_t N = 1; N <= 60; ++N) {
    for (std::int64_t m = 0; m < N; ++m) {
      if (!reflection_sandwich(N, m).holds) ++sandwich;
    }
  }
  out.push_back(check(s, "reflection bounds bracket exact tail counts, N<=60", sandwich, 0, false));

  // At fixed n the normalized log-probability converges to the finite-n
  // constant 2(n+1)^2 log cos(pi/(n+1)); that constant tends to -pi^2 in n.
  const std::int64_t n = 10;
  const double fixed_n = 2.0 * 121.0 * std::log(std::cos(kPi / 11.0));
  double prev = std::numeric_limits<double>::infinity();
  double md_nonmono = 0;
  double md_last = 0.0;
  for (std::int64_t N : {1000, 10000, 100000}) {
    const double gap = std::abs(md_rate_prelimit(N, n).prelimit - fixed_n);
    if (!(gap < prev)) ++md_nonmono;
    prev = gap;
    md_last = gap;
  }
  out.push_back(check(s, "md prelimit converges at fixed n=10", md_nonmono, 0, false));
  out.push_back(check(s, "md prelimit gap to fixed-n constant at N=1e5", md_last, 0.02));
  const double big_n = 1000.0;
  const double far = 2.0 * (big_n + 1) * (big_n + 1) * std::log(std::cos(kPi / (big_n + 1)));
  out.push_back(check(s, "fixed-n constant approaches -pi^2 (n=1000)", std::abs(far + kPi * kPi), 1e-4));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracle", "spectral", "identity", "rates"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "' (oracle, spectral, identity, rates, all)");
  }
  if (all || suite == "oracle") oracle_suite(out);
  if (all || suite == "spectral") spectral_suite(out);
  if (all || suite == "identity") identity_suite(out);
  if (all || suite == "rates") rates_suite(out);
  return out;
}

}  // namespace dyckmax
