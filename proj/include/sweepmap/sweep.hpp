#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sweepmap/path.hpp"

namespace sweepmap {

// Order in which equal-level labels are taken. Only kRightToLeft gives a
// bijection; kLeftToRight exists to exhibit collisions.
enum class ScanDirection { kRightToLeft, kLeftToRight };

// sigma[i] and tau[i] describe the same label. tau is nondecreasing.
struct SweptWord {
  int n = 0;
  std::string sigma;
  std::vector<Level> tau;

  friend bool operator==(const SweptWord&, const SweptWord&) = default;
};

// Sorts the step labels by level. Ties go to scan order: for right-to-left,
// the label further right in the path comes first.
SweptWord sweep_map(const DyckPath& path,
                    ScanDirection direction = ScanDirection::kRightToLeft);

struct InheritanceVerdict {
  bool pass = true;
  // 1-based positions of S entries whose level differs from the W that
  // precedes them (directly, or through one intervening S).
  std::vector<std::size_t> violations;
};

// On a right-to-left sweep image, an S that follows a W (or follows an S
// that follows a W) sits at that W's level.
InheritanceVerdict check_level_inheritance(const SweptWord& word);

// Two distinct paths with the same left-to-right sweep word S^n W^(2n).
// Both throw N_TOO_SMALL for n < 2, where they coincide.
DyckPath collision_witness_a(int n);  // (N E E)^n
DyckPath collision_witness_b(int n);  // N E (N E E)^(n-1) E

}  // namespace sweepmap
