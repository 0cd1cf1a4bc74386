#include "sweepmap/path.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sweepmap/error.hpp"

namespace sweepmap {

DyckPath DyckPath::validate(int n, std::string_view word) {
  if (n < 1) {
    throw SweepError(ErrorCode::kNTooSmall,
                     "n must be positive, got " + std::to_string(n));
  }
  const std::size_t expected = 3 * static_cast<std::size_t>(n);
  if (word.size() != expected) {
    throw SweepError(ErrorCode::kWrongLength,
                     "expected " + std::to_string(expected) + " steps, got " +
                         std::to_string(word.size()));
  }
  std::size_t norths = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'N') {
      ++norths;
    } else if (word[i] != 'E') {
      throw SweepError(ErrorCode::kInvalidLetter,
                       std::string("path letters are N or E, got '") +
                           word[i] + "'",
                       i + 1);
    }
  }
  if (norths != static_cast<std::size_t>(n)) {
    throw SweepError(ErrorCode::kWrongCounts,
                     "expected " + std::to_string(n) + " N and " +
                         std::to_string(2 * n) + " E, got " +
                         std::to_string(norths) + " N and " +
                         std::to_string(word.size() - norths) + " E");
  }
  Level level = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    level += word[i] == 'N' ? 2 * Level{n} : -Level{n};
    if (level < 0) {
      throw SweepError(ErrorCode::kBelowZero,
                       "level " + std::to_string(level) + " after step " +
                           std::to_string(i + 1),
                       i + 1);
    }
  }
  return DyckPath(n, std::string(word));
}

std::vector<Level> level_profile(const DyckPath& path) {
  std::vector<Level> levels;
  levels.reserve(path.size() + 1);
  Level level = 0;
  levels.push_back(level);
  for (std::size_t i = 0; i < path.size(); ++i) {
    level += path.is_north(i) ? path.north_rise() : -path.east_drop();
    levels.push_back(level);
  }
  return levels;
}

Level max_level(const DyckPath& path) {
  const auto levels = level_profile(path);
  return *std::max_element(levels.begin(), levels.end());
}

std::vector<LabeledStep> step_labels(const DyckPath& path) {
  const auto levels = level_profile(path);
  std::vector<LabeledStep> labels;
  labels.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    labels.push_back({path.is_north(i) ? Letter::kSouth : Letter::kWest,
                      levels[i]});
  }
  return labels;
}

DyckPath sawtooth_path(int n) {
  std::string word;
  for (int i = 0; i < n; ++i) word += "NEE";
  return DyckPath::validate(n, word);
}

DyckPath staircase_path(int n) {
  return DyckPath::validate(
      n, std::string(std::max(n, 0), 'N') + std::string(2 * std::max(n, 0), 'E'));
}

std::string to_sweep_alphabet(std::string_view path_word) {
  std::string out(path_word);
  for (std::size_t i = 0; i < out.size(); ++i) {
    switch (out[i]) {
      case 'N': out[i] = 'S'; break;
      case 'E': out[i] = 'W'; break;
      default:
        throw SweepError(ErrorCode::kInvalidLetter,
                         std::string("path letters are N or E, got '") +
                             out[i] + "'",
                         i + 1);
    }
  }
  return out;
}

std::string to_path_alphabet(std::string_view sigma) {
  std::string out(sigma);
  for (std::size_t i = 0; i < out.size(); ++i) {
    switch (out[i]) {
      case 'S': out[i] = 'N'; break;
      case 'W': out[i] = 'E'; break;
      default:
        throw SweepError(ErrorCode::kInvalidLetter,
                         std::string("sweep letters are S or W, got '") +
                             out[i] + "'",
                         i + 1);
    }
  }
  return out;
}

PathEnumerator::PathEnumerator(int n) : n_(n) {
  if (n < 1) {
    throw SweepError(ErrorCode::kNTooSmall,
                     "n must be positive, got " + std::to_string(n));
  }
  word_ = std::string(n, 'N') + std::string(2 * n, 'E');
}

std::optional<DyckPath> PathEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return DyckPath::validate(n_, word_);
}

// Moves word_ to its lexicographic successor among valid paths. The
// right-most N that can become an E without dropping below zero is flipped;
// the suffix is then refilled with the smallest completion, all remaining N
// before all remaining E, which never dips below the level it starts from.
bool PathEnumerator::advance() {
  const Level rise = 2 * Level{n_};
  const Level drop = Level{n_};
  std::vector<Level> prefix_level(word_.size() + 1, 0);
  std::vector<int> prefix_easts(word_.size() + 1, 0);
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const bool north = word_[i] == 'N';
    prefix_level[i + 1] = prefix_level[i] + (north ? rise : -drop);
    prefix_easts[i + 1] = prefix_easts[i] + (north ? 0 : 1);
  }
  for (std::size_t i = word_.size(); i-- > 0;) {
    if (word_[i] != 'N') continue;
    if (prefix_level[i] - drop < 0) continue;
    const int easts_used = prefix_easts[i] + 1;
    if (easts_used > 2 * n_) continue;
    const int norths_used = static_cast<int>(i) - prefix_easts[i];
    word_[i] = 'E';
    std::size_t j = i + 1;
    for (int k = norths_used; k < n_; ++k) word_[j++] = 'N';
    while (j < word_.size()) word_[j++] = 'E';
    return true;
  }
  return false;
}

std::vector<DyckPath> enumerate_paths(int n) {
  std::vector<DyckPath> paths;
  PathEnumerator it(n);
  while (auto path = it.next()) paths.push_back(std::move(*path));
  return paths;
}

std::uint64_t path_count_closed_form(int n) {
  if (n < 1) return 0;
  // C(3n, n) built as C(2n+i, i) for i = 1..n. Each step multiplies by
  // (2n+i)/i; dividing out the gcd first keeps every operation exact.
  std::uint64_t binom = 1;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(n); ++i) {
    const std::uint64_t g = std::gcd(binom, i);
    const std::uint64_t factor = (2 * static_cast<std::uint64_t>(n) + i) / (i / g);
    if (binom / g > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("path count overflows 64 bits at n = " +
                                std::to_string(n));
    }
    binom = binom / g * factor;
  }
  return binom / (2 * static_cast<std::uint64_t>(n) + 1);
}

}  // namespace sweepmap
