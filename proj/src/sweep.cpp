#include "sweepmap/sweep.hpp"

#include <algorithm>
#include <numeric>

#include "sweepmap/error.hpp"

namespace sweepmap {

SweptWord sweep_map(const DyckPath& path, ScanDirection direction) {
  const auto labels = step_labels(path);
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (direction == ScanDirection::kRightToLeft) {
    std::reverse(order.begin(), order.end());
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return labels[a].level < labels[b].level;
                   });

  SweptWord out;
  out.n = path.n();
  out.sigma.reserve(order.size());
  out.tau.reserve(order.size());
  for (std::size_t i : order) {
    out.sigma.push_back(static_cast<char>(labels[i].letter));
    out.tau.push_back(labels[i].level);
  }
  return out;
}

InheritanceVerdict check_level_inheritance(const SweptWord& word) {
  InheritanceVerdict verdict;
  const auto& sigma = word.sigma;
  const auto& tau = word.tau;
  const std::size_t len = std::min(sigma.size(), tau.size());
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (sigma[i] != 'W' || sigma[i + 1] != 'S') continue;
    if (tau[i + 1] != tau[i]) verdict.violations.push_back(i + 2);
    if (i + 2 < len && sigma[i + 2] == 'S' && tau[i + 2] != tau[i]) {
      verdict.violations.push_back(i + 3);
    }
  }
  verdict.pass = verdict.violations.empty();
  return verdict;
}

DyckPath collision_witness_a(int n) {
  if (n < 2) {
    throw SweepError(ErrorCode::kNTooSmall,
                     "collision witnesses need n >= 2, got " +
                         std::to_string(n));
  }
  return sawtooth_path(n);
}

DyckPath collision_witness_b(int n) {
  if (n < 2) {
    throw SweepError(ErrorCode::kNTooSmall,
                     "collision witnesses need n >= 2, got " +
                         std::to_string(n));
  }
  std::string word = "NE";
  for (int i = 1; i < n; ++i) word += "NEE";
  word += "E";
  return DyckPath::validate(n, word);
}

}  // namespace sweepmap
