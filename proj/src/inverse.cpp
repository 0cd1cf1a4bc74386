#include "sweepmap/inverse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "sweepmap/error.hpp"

namespace sweepmap {

namespace {

// Returns n for a sigma that spells a valid path, throws INVALID_SIGMA
// otherwise.
int checked_sigma_size(std::string_view sigma) {
  if (sigma.empty() || sigma.size() % 3 != 0) {
    throw SweepError(ErrorCode::kInvalidSigma,
                     "WRONG_LENGTH: length " + std::to_string(sigma.size()) +
                         " is not a positive multiple of 3");
  }
  const int n = static_cast<int>(sigma.size() / 3);
  try {
    DyckPath::validate(n, to_path_alphabet(sigma));
  } catch (const SweepError& e) {
    std::string what = e.what();
    // Report letters in the sweep alphabet.
    if (e.code() == ErrorCode::kInvalidLetter) {
      what = std::string(error_token(e.code())) + "(" +
             std::to_string(*e.position()) + ")";
    } else if (e.code() == ErrorCode::kWrongCounts) {
      what = "WRONG_COUNTS: expected " + std::to_string(n) + " S and " +
             std::to_string(2 * n) + " W";
    }
    throw SweepError(ErrorCode::kInvalidSigma, what, e.position());
  }
  return n;
}

}  // namespace

std::vector<Level> recover_ranks(std::string_view sigma,
                                 std::vector<RecoveryStep>* trace) {
  const int n = checked_sigma_size(sigma);
  const Level two_n = 2 * Level{n};
  const std::size_t len = sigma.size();

  std::vector<std::optional<Level>> slots(len);
  slots[0] = 0;
  for (std::size_t i = 1; i < len; ++i) {
    if (slots[i]) continue;
    const Level anchor = *slots[i - 1];
    if (sigma[i] == 'S') {
      slots[i] = anchor;
      continue;
    }

    RecoveryStep step;
    step.position = i + 1;
    step.anchor = anchor;
    for (std::size_t j = 0; j < len; ++j) {
      if (!slots[j]) continue;
      if (*slots[j] == anchor) ++step.same_level;
      if (*slots[j] == anchor - two_n && sigma[j] == 'S') ++step.south_below;
      if (j > i) step.filled_beyond_cursor = true;
    }
    const std::int64_t diff = step.difference();
    if (diff == 0) {
      throw SweepError(ErrorCode::kStuckZeroDifference,
                       "no rule applies at level " + std::to_string(anchor),
                       i + 1);
    }
    step.assigned = diff > 0 ? anchor + n : anchor;
    step.block = static_cast<std::size_t>(diff > 0 ? diff : -diff);

    std::size_t remaining = step.block;
    for (std::size_t j = i; j < len && remaining > 0; ++j) {
      if (sigma[j] == 'W' && !slots[j]) {
        slots[j] = step.assigned;
        --remaining;
      }
    }
    if (remaining > 0) {
      throw SweepError(ErrorCode::kBlockOverrun,
                       "block of " + std::to_string(step.block) +
                           " W entries at level " +
                           std::to_string(step.assigned) + " is short by " +
                           std::to_string(remaining),
                       i + 1);
    }
    if (trace) trace->push_back(step);
  }

  std::vector<Level> tau;
  tau.reserve(len);
  for (const auto& slot : slots) tau.push_back(*slot);
  return tau;
}

DyckPath reconstruct_path(std::string_view sigma,
                          const std::vector<Level>& tau) {
  if (sigma.empty() || sigma.size() % 3 != 0) {
    throw SweepError(ErrorCode::kInvalidSigma,
                     "length " + std::to_string(sigma.size()) +
                         " is not a positive multiple of 3");
  }
  if (tau.size() != sigma.size()) {
    throw SweepError(ErrorCode::kInvalidRanks,
                     "tau has " + std::to_string(tau.size()) +
                         " entries, sigma has " + std::to_string(sigma.size()));
  }
  const int n = static_cast<int>(sigma.size() / 3);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != 'S' && sigma[i] != 'W') {
      throw SweepError(ErrorCode::kInvalidSigma,
                       std::string("sweep letters are S or W, got '") +
                           sigma[i] + "'",
                       i + 1);
    }
    if (tau[i] < 0 || tau[i] % n != 0) {
      throw SweepError(ErrorCode::kInvalidRanks,
                       "entry " + std::to_string(tau[i]) +
                           " is not a nonnegative multiple of " +
                           std::to_string(n),
                       i + 1);
    }
    if (i > 0 && tau[i] < tau[i - 1]) {
      throw SweepError(ErrorCode::kInvalidRanks, "tau decreases", i + 1);
    }
  }

  // Positions per level in ascending order; the back is the right-most.
  std::map<Level, std::vector<std::size_t>> unused;
  for (std::size_t i = 0; i < tau.size(); ++i) unused[tau[i]].push_back(i);

  std::string word;
  word.reserve(sigma.size());
  Level level = 0;
  for (std::size_t step = 0; step < sigma.size(); ++step) {
    auto it = unused.find(level);
    if (it == unused.end() || it->second.empty()) {
      throw SweepError(ErrorCode::kNoEntryAtLevel,
                       "no unused entry at level " + std::to_string(level),
                       step + 1);
    }
    const std::size_t pos = it->second.back();
    it->second.pop_back();
    if (sigma[pos] == 'S') {
      word.push_back('N');
      level += 2 * Level{n};
    } else {
      word.push_back('E');
      level -= n;
    }
  }

  try {
    return DyckPath::validate(n, word);
  } catch (const SweepError& e) {
    throw SweepError(ErrorCode::kResultNotDyck, word + ": " + e.what());
  }
}

DyckPath invert_sweep(std::string_view sigma) {
  return reconstruct_path(sigma, recover_ranks(sigma));
}

}  // namespace sweepmap
