#pragma once

// Brute-force ground truth over the full path set for one n.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sweepmap/path.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap {

// Largest n verified by default; 43263 paths at n = 8.
inline constexpr int kDefaultEnumerationBudget = 8;

// Every path whose right-to-left sweep word equals sigma, in enumeration
// order. Empty when sigma has no preimage. Throws BUDGET_EXCEEDED when n
// exceeds budget.
std::vector<DyckPath> brute_force_invert(std::string_view sigma, int n,
                                         int budget = kDefaultEnumerationBudget);

struct Counterexample {
  std::string path;
  std::string kind;  // e.g. DUPLICATE_SIGMA, ROUNDTRIP_MISMATCH, an error token

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerifyReport {
  int n = 0;
  std::uint64_t path_count = 0;
  std::uint64_t image_count = 0;  // distinct right-to-left sigma words
  bool injective = false;
  bool roundtrip_ok = false;
  bool inheritance_ok = false;    // S entries take the preceding W's level
  bool level_bounds_ok = false;   // 2n <= max level <= 2n^2
  std::vector<Counterexample> counterexamples;

  bool all_ok() const {
    return injective && roundtrip_ok && inheritance_ok && level_bounds_ok;
  }
};

struct VerifyOptions {
  int budget = kDefaultEnumerationBudget;
  // Worker threads; 0 picks the hardware concurrency. The report does not
  // depend on this value.
  unsigned workers = 1;
};

VerifyReport verify_bijectivity(int n, const VerifyOptions& options = {});

struct CollisionGroup {
  std::string sigma;
  std::vector<std::string> preimages;  // path words, enumeration order
};

// Groups all paths by their left-to-right sweep word and keeps the groups
// with two or more members, ordered by sigma.
std::vector<CollisionGroup> l2r_collision_census(
    int n, int budget = kDefaultEnumerationBudget);

}  // namespace sweepmap
