#include "dyckmax/dyck_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckmax {

bool is_dyck(const std::vector<Step>& steps) noexcept {
  if (steps.size() % 2 != 0) return false;
  std::int64_t height = 0;
  for (Step s : steps) {
    height += static_cast<std::int64_t>(s);
    if (height < 0) return false;
  }
  return height == 0;
}

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (!is_dyck(steps_)) throw std::invalid_argument("step sequence is not a Dyck path");
}

DyckPath DyckPath::from_string(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U' || c == 'u') {
      steps.push_back(Step::up);
    } else if (c == 'D' || c == 'd') {
      steps.push_back(Step::down);
    } else {
      throw std::invalid_argument("path text may only contain U and D");
    }
  }
  return DyckPath(std::move(steps));
}

std::int64_t DyckPath::max_height() const noexcept {
  std::int64_t height = 0;
  std::int64_t best = 0;
  for (Step s : steps_) {
    height += static_cast<std::int64_t>(s);
    best = std::max(best, height);
  }
  return best;
}

std::int64_t DyckPath::height_at(std::size_t i) const {
  if (i > steps_.size()) throw std::out_of_range("step index past end of path");
  std::int64_t height = 0;
  for (std::size_t k = 0; k < i; ++k) height += static_cast<std::int64_t>(steps_[k]);
  return height;
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += (s == Step::up ? 'U' : 'D');
  return out;
}

}  // namespace dyckmax
