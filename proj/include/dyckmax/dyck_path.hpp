#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dyckmax {

enum class Step : std::int8_t { down = -1, up = 1 };

/// A sequence of +-1 steps whose prefix sums stay >= 0 and end at 0.
/// The constructor rejects anything else, so every DyckPath is valid.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<Step> steps);

  /// Parses "UUDD"-style text.
  static DyckPath from_string(std::string_view text);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::int64_t half_length() const noexcept { return static_cast<std::int64_t>(steps_.size() / 2); }
  std::int64_t max_height() const noexcept;
  /// Height after the first `i` steps.
  std::int64_t height_at(std::size_t i) const;
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// True iff `steps` satisfies the Dyck invariants.
bool is_dyck(const std::vector<Step>& steps) noexcept;

}  // namespace dyckmax
