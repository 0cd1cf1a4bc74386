#pragma once

// (2n,n)-Dyck paths: n north steps worth +2n levels each and 2n east steps
// worth -n levels each, never dropping below level 0.
//
// Path words are spelled over {N, E}. Sweep outputs are spelled over {S, W};
// the transliteration is fixed as S <-> N and W <-> E.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sweepmap {

using Level = std::int64_t;

enum class Letter : char { kSouth = 'S', kWest = 'W' };

struct LabeledStep {
  Letter letter;
  Level level;  // level of the step's south (N) or west (E) endpoint

  friend bool operator==(const LabeledStep&, const LabeledStep&) = default;
};

class DyckPath {
 public:
  // Checks run in order and throw SweepError with the first failure:
  // N_TOO_SMALL (n < 1), WRONG_LENGTH, INVALID_LETTER(position),
  // WRONG_COUNTS, BELOW_ZERO(position of the offending step).
  static DyckPath validate(int n, std::string_view word);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return word_.size(); }
  const std::string& word() const noexcept { return word_; }
  bool is_north(std::size_t i) const { return word_[i] == 'N'; }

  Level north_rise() const noexcept { return 2 * static_cast<Level>(n_); }
  Level east_drop() const noexcept { return static_cast<Level>(n_); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  DyckPath(int n, std::string word) : n_(n), word_(std::move(word)) {}

  int n_;
  std::string word_;
};

// Entry 0 is the start level 0; entry i is the level after i steps.
std::vector<Level> level_profile(const DyckPath& path);
Level max_level(const DyckPath& path);

// Left-to-right path order, one label per step.
std::vector<LabeledStep> step_labels(const DyckPath& path);

// (N E E)^n, the lowest possible path: max level 2n.
DyckPath sawtooth_path(int n);
// N^n E^(2n), the highest possible path: max level 2n^2.
DyckPath staircase_path(int n);

// Transliterations between the path alphabet and the sweep alphabet. Both
// throw INVALID_LETTER on a character outside the source alphabet.
std::string to_sweep_alphabet(std::string_view path_word);
std::string to_path_alphabet(std::string_view sigma);

// Yields every path for one n, each exactly once, in lexicographic order
// with N < E.
class PathEnumerator {
 public:
  explicit PathEnumerator(int n);

  std::optional<DyckPath> next();

 private:
  bool advance();

  int n_;
  std::string word_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<DyckPath> enumerate_paths(int n);

// (1 / (2n+1)) * C(3n, n), the number of (2n,n)-Dyck paths.
std::uint64_t path_count_closed_form(int n);

}  // namespace sweepmap
