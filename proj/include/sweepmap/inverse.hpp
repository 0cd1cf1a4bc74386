#pragma once

// Inversion of the right-to-left sweep map: first recover the rank sequence
// tau from sigma alone, then rebuild the path by consuming, at each level,
// the right-most unused entry of tau.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sweepmap/path.hpp"

namespace sweepmap {

// One block assignment made while recovering ranks, recorded when the
// cursor reaches an unfilled W.
struct RecoveryStep {
  std::size_t position = 0;     // 1-based cursor position
  Level anchor = 0;             // level of the slot before the cursor
  std::int64_t same_level = 0;  // filled slots at the anchor level
  std::int64_t south_below = 0; // filled S slots at anchor - 2n
  Level assigned = 0;           // level written to the block
  std::size_t block = 0;        // number of W slots written
  bool filled_beyond_cursor = false;  // any slot past the cursor already set

  std::int64_t difference() const { return same_level - south_below; }
};

// Recovers tau from sigma. sigma must spell a valid path under S->N, W->E,
// otherwise INVALID_SIGMA is thrown with the underlying validation failure
// in its message. STUCK_ZERO_DIFFERENCE(i) and BLOCK_OVERRUN(i) report the
// two ways the block rule can fail to make progress.
std::vector<Level> recover_ranks(std::string_view sigma,
                                 std::vector<RecoveryStep>* trace = nullptr);

// Rebuilds the path from an aligned (sigma, tau) pair. Throws INVALID_SIGMA
// or INVALID_RANKS on malformed input, NO_ENTRY_AT_LEVEL(step) when no
// unused entry carries the current level, and RESULT_NOT_DYCK when the
// emitted word is not a valid path.
DyckPath reconstruct_path(std::string_view sigma, const std::vector<Level>& tau);

DyckPath invert_sweep(std::string_view sigma);

}  // namespace sweepmap
