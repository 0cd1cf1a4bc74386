#include "sweepmap/error.hpp"

namespace sweepmap {

std::string_view error_token(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kWrongLength: return "WRONG_LENGTH";
    case ErrorCode::kWrongCounts: return "WRONG_COUNTS";
    case ErrorCode::kBelowZero: return "BELOW_ZERO";
    case ErrorCode::kInvalidLetter: return "INVALID_LETTER";
    case ErrorCode::kNTooSmall: return "N_TOO_SMALL";
    case ErrorCode::kInvalidSigma: return "INVALID_SIGMA";
    case ErrorCode::kInvalidRanks: return "INVALID_RANKS";
    case ErrorCode::kStuckZeroDifference: return "STUCK_ZERO_DIFFERENCE";
    case ErrorCode::kBlockOverrun: return "BLOCK_OVERRUN";
    case ErrorCode::kNoEntryAtLevel: return "NO_ENTRY_AT_LEVEL";
    case ErrorCode::kResultNotDyck: return "RESULT_NOT_DYCK";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

namespace {

std::string compose(ErrorCode code, const std::string& detail,
                    std::optional<std::size_t> position) {
  std::string msg(error_token(code));
  if (position) msg += "(" + std::to_string(*position) + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

SweepError::SweepError(ErrorCode code, std::string detail,
                       std::optional<std::size_t> position)
    : std::runtime_error(compose(code, detail, position)),
      code_(code),
      position_(position),
      detail_(std::move(detail)) {}

}  // namespace sweepmap
