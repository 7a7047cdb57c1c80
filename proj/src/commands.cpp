#include "dyckmax/commands.hpp"

#include <cmath>
#include <limits>

#include "dyckmax/bigcount.hpp"
#include "dyckmax/deviations.hpp"
#include "dyckmax/exact_counts.hpp"
#include "dyckmax/sampler.hpp"
#include "dyckmax/spectral.hpp"
#include "dyckmax/verify.hpp"

namespace dyckmax {

namespace {

std::string count_text(const BigCount& c, bool approx) { return approx ? to_scientific(c) : to_decimal(c); }

Json series_metadata(const SeriesSpec& spec) {
  return Json{{"abs_tol", spec.abs_tol}, {"max_terms", spec.max_terms}};
}

Json optional_real(const std::optional<double>& v) { return v ? real_cell(*v) : Json(nullptr); }

}  // namespace

Json base_metadata() {
  return Json{{"tool", "dyckmax"}, {"version", DYCKMAX_VERSION}, {"schema_version", kSchemaVersion}};
}

OutputRecord cmd_count(const CountOptions& opt) {
  if (opt.N < 0) throw UsageError("--N must be >= 0");
  const std::int64_t n = opt.n.value_or(opt.N + 1);
  if (n < 1) throw UsageError("--n must be >= 1");
  const bool all = opt.method == "all";
  if (!all && opt.method != "dp" && opt.method != "matrix" && opt.method != "spectral") {
    throw UsageError("--method must be one of dp, matrix, spectral, all");
  }

  OutputRecord rec;
  rec.command = "count";
  rec.params = Json{{"N", opt.N}, {"n", n}, {"method", opt.method}, {"approx", opt.approx}};
  rec.metadata = base_metadata();

  auto exact_row = [&](const char* method, const BigCount& c) {
    return Json{{"method", method}, {"N", opt.N}, {"n", n}, {"count", count_text(c, opt.approx)},
                {"log_count", real_cell(log_of(c))}};
  };

  std::optional<BigCount> dp;
  std::optional<BigCount> matrix;
  if (all || opt.method == "dp") {
    dp = count_bounded(opt.N, n);
    rec.rows.push_back(exact_row("dp", *dp));
  }
  if (all || opt.method == "matrix") {
    matrix = count_bounded_matrix(opt.N, n);
    rec.rows.push_back(exact_row("matrix", *matrix));
  }
  if (all || opt.method == "spectral") {
    const double log_count = log_spectral_ratio(opt.N, n) + log_catalan(opt.N);
    Json value = "out-of-range";
    std::optional<double> direct;
    if (opt.N <= kMaxDirectSpectralN) {
      direct = spectral_count(opt.N, n);
      value = real_cell(*direct);
    } else if (!all) {
      throw UsageError("spectral_count: N > " + std::to_string(kMaxDirectSpectralN) +
                       " overflows double; use --method dp or the deviation command");
    }
    rec.rows.push_back(Json{{"method", "spectral"}, {"N", opt.N}, {"n", n}, {"count", value},
                            {"log_count", real_cell(log_count)}});
    if (all) {
      const bool exact_agree = *dp == *matrix;
      rec.summary["dp_equals_matrix"] = exact_agree;
      if (direct) {
        const double exact = dp->get_d();
        const double rel = exact == 0.0 ? std::abs(*direct) : std::abs(*direct - exact) / exact;
        rec.summary["spectral_error"] = real_cell(rel);
        rec.summary["spectral_error_kind"] = exact == 0.0 ? "absolute" : "relative";
      }
      rec.summary["log_spectral_gap"] = real_cell(std::abs(log_count - log_of(*dp)));
    }
  }
  return rec;
}

OutputRecord cmd_dist(const DistOptions& opt) {
  if (opt.N < 1) throw UsageError("--N must be >= 1");
  OutputRecord rec;
  rec.command = "dist";
  rec.params = Json{{"N", opt.N}, {"approx", opt.approx}};
  rec.metadata = base_metadata();
  const BigCount total = catalan(opt.N);
  BigCount running = 0;
  for (const auto& [h, c] : max_height_pmf(opt.N)) {
    running += c;
    rec.rows.push_back(Json{{"height", h},
                            {"pmf_numerator", count_text(c, opt.approx)},
                            {"cdf_numerator", count_text(running, opt.approx)},
                            {"denominator", count_text(total, opt.approx)},
                            {"pmf", real_cell(ratio_to_double(c, total))},
                            {"cdf", real_cell(ratio_to_double(running, total))}});
  }
  rec.summary["catalan"] = to_decimal(total);
  rec.summary["cdf_complete"] = running == total;
  return rec;
}

OutputRecord cmd_limit(const LimitOptions& opt) {
  if (opt.xs.empty() && opt.ts.empty()) throw UsageError("limit needs --x or --t grid values");
  struct Point {
    double x;
    double t;
  };
  std::vector<Point> grid;
  for (double x : opt.xs) {
    if (!(x > 0.0) || !std::isfinite(x)) throw UsageError("--x values must be > 0");
    grid.push_back({x, 1.0 / (2.0 * x * x)});
  }
  for (double t : opt.ts) {
    if (!(t > 0.0) || !std::isfinite(t)) throw UsageError("--t values must be > 0");
    grid.push_back({1.0 / std::sqrt(2.0 * t), t});
  }

  OutputRecord rec;
  rec.command = "limit";
  rec.params = Json{{"x", opt.xs}, {"t", opt.ts}, {"tol", opt.series.abs_tol}};
  rec.metadata = base_metadata();
  rec.metadata["series"] = series_metadata(opt.series);

  std::vector<LimitEval> fs(grid.size());
  std::vector<LimitEval> ks(grid.size());
  const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& p = grid[static_cast<std::size_t>(i)];
    fs[static_cast<std::size_t>(i)] = f_of_x(p.x, opt.series);
    ks[static_cast<std::size_t>(i)] = k_of_x(p.x, opt.series);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double diff = std::abs(fs[i].raw - ks[i].raw);
    worst = std::max(worst, diff);
    rec.rows.push_back(Json{{"x", grid[i].x},
                            {"t", grid[i].t},
                            {"f", real_cell(fs[i].value)},
                            {"K", real_cell(ks[i].value)},
                            {"abs_diff", real_cell(diff)},
                            {"f_terms", fs[i].terms_used},
                            {"f_tail", real_cell(fs[i].tail_bound)},
                            {"K_terms", ks[i].terms_used},
                            {"K_tail", real_cell(ks[i].tail_bound)}});
  }
  rec.summary["max_abs_diff"] = real_cell(worst);
  return rec;
}

OutputRecord cmd_deviation(const DeviationOptions& opt) {
  const std::string& r = opt.regime;
  if (r != "moderate" && r != "gaussian" && r != "cramer") {
    throw UsageError("--regime must be one of moderate, gaussian, cramer");
  }
  if (opt.Ns.empty()) throw UsageError("deviation needs at least one --N");
  if (r != "cramer" && opt.ns.empty()) throw UsageError("--regime " + r + " needs --n");
  if (r != "moderate" && opt.xs.empty()) throw UsageError("--regime " + r + " needs --x");

  OutputRecord rec;
  rec.command = "deviation";
  rec.params = Json{{"regime", r}, {"N", opt.Ns}, {"n", opt.ns}, {"x", opt.xs}, {"unit_x", opt.unit_x}};
  rec.metadata = base_metadata();

  auto row = [&](const char* regime, const std::string& event, const RateDiagnostic& d,
                 const std::optional<ReflectionSandwich>& sw, std::optional<double> two_term,
                 std::optional<double> spectral_log) {
    Json lower = nullptr;
    Json upper = nullptr;
    Json holds = nullptr;
    if (sw) {
      const double scale = static_cast<double>(d.N) / (2.0 * static_cast<double>(d.n) * static_cast<double>(d.n));
      const BigCount total = catalan(d.N);
      lower = real_cell(sgn(sw->lower) == 0 ? -std::numeric_limits<double>::infinity()
                                            : scale * log_ratio(sw->lower, total));
      upper = real_cell(scale * log_ratio(sw->upper, total));
      holds = sw->holds;
    }
    return Json{{"regime", regime},
                {"N", d.N},
                {"n", d.n},
                {"x", d.x},
                {"m", d.m},
                {"event", event},
                {"prelimit", real_cell(d.prelimit)},
                {"limit", real_cell(d.limit)},
                {"gap", real_cell(d.gap)},
                {"impossible", d.impossible},
                {"outside_regime", d.outside_regime},
                {"extrapolated", d.extrapolated},
                {"boundary_event", d.boundary_event},
                {"lower_bound", lower},
                {"upper_bound", upper},
                {"sandwich_holds", holds},
                {"two_term_log", optional_real(two_term)},
                {"log_ratio", optional_real(spectral_log)}};
  };

  for (std::int64_t N : opt.Ns) {
    if (r == "moderate") {
      for (std::int64_t n : opt.ns) {
        const RateDiagnostic d = md_rate_prelimit(N, n);
        rec.rows.push_back(row("moderate", "max < n", d, std::nullopt, md_asymptotic_log(N, n),
                               log_spectral_ratio(N, n)));
      }
    } else if (r == "gaussian") {
      for (std::int64_t n : opt.ns) {
        for (double x : opt.xs) {
          const RateDiagnostic d = ld_gaussian_prelimit(N, n, x);
          std::optional<ReflectionSandwich> sw;
          if (d.m < N) sw = reflection_sandwich(N, d.m);
          rec.rows.push_back(row("gaussian", "max > m", d, sw, std::nullopt, std::nullopt));
        }
        if (opt.unit_x) {
          const RateDiagnostic d = ld_unit_prelimit(N, n);
          rec.rows.push_back(row("gaussian-unit", "max > n", d, std::nullopt, std::nullopt, std::nullopt));
        }
      }
    } else {
      for (double x : opt.xs) {
        const RateDiagnostic d = cramer_prelimit(N, x);
        rec.rows.push_back(row("cramer", d.boundary_event ? "max >= N" : "max > m", d, std::nullopt,
                               std::nullopt, std::nullopt));
      }
    }
  }
  return rec;
}

OutputRecord cmd_sample(const SampleOptions& opt) {
  if (opt.N < 1) throw UsageError("--N must be >= 1");
  if (opt.draws < 1) throw UsageError("--draws must be >= 1");
  OutputRecord rec;
  rec.command = "sample";
  rec.params = Json{{"N", opt.N}, {"draws", opt.draws}, {"seed", opt.seed}};
  rec.metadata = base_metadata();
  rec.metadata["seed"] = opt.seed;
  rec.metadata["generator"] = "mt19937_64";
  rec.metadata["significance"] = opt.significance;

  const SamplerTable table(opt.N);
  RandomStream rng(opt.seed);
  const auto hist = max_histogram(table, opt.draws, rng);
  const auto exact = max_height_pmf(opt.N);
  const BigCount total = catalan(opt.N);
  const double scale = std::sqrt(2.0 * static_cast<double>(opt.N));

  std::vector<double> emp;
  std::vector<double> ref;
  double emp_cdf = 0.0;
  BigCount exact_cdf = 0;
  for (const auto& [h, c] : hist) {
    const double e = static_cast<double>(c) / static_cast<double>(opt.draws);
    const double p = ratio_to_double(exact.at(h), total);
    emp.push_back(e);
    ref.push_back(p);
    emp_cdf += e;
    exact_cdf += exact.at(h);
    const double x = static_cast<double>(h) / scale;
    rec.rows.push_back(Json{{"height", h},
                            {"observed", c},
                            {"empirical", e},
                            {"exact_pmf", real_cell(p)},
                            {"empirical_cdf", emp_cdf},
                            {"exact_cdf", real_cell(ratio_to_double(exact_cdf, total))},
                            {"x", x},
                            {"limit_cdf", real_cell(limit_cdf(x).value)}});
  }
  const double ks = stats::ks_distance(emp, ref);
  const double crit = stats::ks_critical(opt.significance, opt.draws);
  rec.summary["ks_distance"] = ks;
  rec.summary["ks_critical"] = crit;
  rec.summary["ks_pass"] = ks < crit;
  return rec;
}

OutputRecord cmd_verify(const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(opt.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  OutputRecord rec;
  rec.command = "verify";
  rec.params = Json{{"suite", opt.suite}};
  rec.metadata = base_metadata();
  bool all_passed = true;
  for (const auto& c : results) {
    all_passed = all_passed && c.passed;
    rec.rows.push_back(Json{{"suite", c.suite},
                            {"check", c.name},
                            {"passed", c.passed},
                            {"measured", real_cell(c.measured)},
                            {"tolerance", real_cell(c.tolerance)}});
  }
  rec.summary["passed"] = all_passed;
  rec.summary["checks"] = results.size();
  return rec;
}

}  // namespace dyckmax
