#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sweepmap {

// Every failure carries one of these codes. The names double as the
// machine-greppable tokens printed by the CLI.
enum class ErrorCode {
  kWrongLength,
  kWrongCounts,
  kBelowZero,
  kInvalidLetter,
  kNTooSmall,
  kInvalidSigma,
  kInvalidRanks,
  kStuckZeroDifference,
  kBlockOverrun,
  kNoEntryAtLevel,
  kResultNotDyck,
  kBudgetExceeded,
};

std::string_view error_token(ErrorCode code) noexcept;

class SweepError : public std::runtime_error {
 public:
  // position is 1-based, matching how paths are read aloud.
  SweepError(ErrorCode code, std::string detail,
             std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
  std::string detail_;
};

}  // namespace sweepmap
