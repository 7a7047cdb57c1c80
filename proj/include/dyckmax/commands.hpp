#pragma once

// Builders behind each CLI subcommand. They validate their inputs, throw
// UsageError for anything the caller got wrong, and return an OutputRecord.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyckmax/asymptotics.hpp"
#include "dyckmax/output.hpp"

namespace dyckmax {

/// Invalid arguments or out-of-domain parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitInternal = 3 };

struct CountOptions {
  std::int64_t N = 0;
  std::optional<std::int64_t> n;  // defaults to N + 1
  std::string method = "dp";      // dp | matrix | spectral | all
  bool approx = false;
};
OutputRecord cmd_count(const CountOptions& opt);

struct DistOptions {
  std::int64_t N = 1;
  bool approx = false;
};
OutputRecord cmd_dist(const DistOptions& opt);

struct LimitOptions {
  std::vector<double> xs;
  std::vector<double> ts;  // each t maps to x = 1/sqrt(2t)
  SeriesSpec series;
};
OutputRecord cmd_limit(const LimitOptions& opt);

struct DeviationOptions {
  std::string regime;  // moderate | gaussian | cramer
  std::vector<std::int64_t> Ns;
  std::vector<std::int64_t> ns;
  std::vector<double> xs;
  bool unit_x = false;  // gaussian: also emit the x = 1 rows
};
OutputRecord cmd_deviation(const DeviationOptions& opt);

struct SampleOptions {
  std::int64_t N = 1;
  std::uint64_t draws = 1;
  std::uint64_t seed = 0;
  double significance = 1e-3;
};
OutputRecord cmd_sample(const SampleOptions& opt);

struct VerifyOptions {
  std::string suite = "all";  // oracle | spectral | identity | rates | all
};
/// The returned record's summary holds "passed": bool.
OutputRecord cmd_verify(const VerifyOptions& opt);

/// Tool name, version and schema version for every record.
Json base_metadata();

}  // namespace dyckmax
