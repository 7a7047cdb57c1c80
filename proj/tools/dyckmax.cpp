// dyckmax: exact and asymptotic statistics of the maximum of a uniform Dyck path.

#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dyckmax/commands.hpp"

namespace {

using namespace dyckmax;

void emit(const OutputRecord& rec, const std::string& format) {
  if (format == "csv") {
    std::cout << rec.to_csv();
  } else {
    std::cout << rec.to_json().dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum height of uniform random Dyck paths"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(DYCKMAX_VERSION));

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };

  CountOptions count;
  std::int64_t count_n = 0;
  auto* count_cmd = app.add_subcommand("count", "Exact number of Dyck paths of length 2N with max < n");
  count_cmd->add_option("--N", count.N, "Half-length N")->required();
  auto* count_n_opt = count_cmd->add_option("--n", count_n, "Height cap (strict); default N+1");
  count_cmd->add_option("--method", count.method, "dp | matrix | spectral | all")->capture_default_str();
  count_cmd->add_flag("--approx", count.approx, "Print counts in scientific notation");
  add_format(count_cmd);

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "Exact distribution of the maximum height");
  dist_cmd->add_option("--N", dist.N, "Half-length N")->required();
  dist_cmd->add_flag("--approx", dist.approx, "Print counts in scientific notation");
  add_format(dist_cmd);

  LimitOptions limit;
  auto* limit_cmd = app.add_subcommand("limit", "Limit law f(x) and K(x) on a grid");
  limit_cmd->add_option("--x", limit.xs, "x grid (comma separated)")->delimiter(',');
  limit_cmd->add_option("--t", limit.ts, "t grid, x = 1/sqrt(2t) (comma separated)")->delimiter(',');
  limit_cmd->add_option("--tol", limit.series.abs_tol, "Absolute truncation tolerance")->capture_default_str();
  limit_cmd->add_option("--max-terms", limit.series.max_terms, "Series term cap")->capture_default_str();
  add_format(limit_cmd);

  DeviationOptions dev;
  auto* dev_cmd = app.add_subcommand("deviation", "Deviation-rate diagnostics from exact counts");
  dev_cmd->add_option("--regime", dev.regime, "moderate | gaussian | cramer")->required();
  dev_cmd->add_option("--N", dev.Ns, "Half-length grid (comma separated)")->delimiter(',')->required();
  dev_cmd->add_option("--n", dev.ns, "Height grid (comma separated)")->delimiter(',');
  dev_cmd->add_option("--x", dev.xs, "x grid (comma separated)")->delimiter(',');
  dev_cmd->add_flag("--unit-x", dev.unit_x, "gaussian: add the x = 1 rows (extrapolated)");
  add_format(dev_cmd);

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Uniform sampling and the empirical maximum");
  sample_cmd->add_option("--N", sample.N, "Half-length N")->required();
  sample_cmd->add_option("--draws", sample.draws, "Number of sampled paths")->capture_default_str();
  sample_cmd->add_option("--seed", sample.seed, "Unsigned 64-bit seed")->capture_default_str();
  sample_cmd->add_option("--significance", sample.significance, "KS test level")->capture_default_str();
  add_format(sample_cmd);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites; exit 1 on any failure");
  verify_cmd->add_option("--suite", verify.suite, "oracle | spectral | identity | rates | all")->capture_default_str();
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count_cmd) {
      if (*count_n_opt) count.n = count_n;
      emit(cmd_count(count), format);
    } else if (*dist_cmd) {
      emit(cmd_dist(dist), format);
    } else if (*limit_cmd) {
      emit(cmd_limit(limit), format);
    } else if (*dev_cmd) {
      emit(cmd_deviation(dev), format);
    } else if (*sample_cmd) {
      emit(cmd_sample(sample), format);
    } else if (*verify_cmd) {
      const OutputRecord rec = cmd_verify(verify);
      emit(rec, format);
      return rec.summary.at("passed").get<bool>() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::range_error& e) {
    std::cerr << "range error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
