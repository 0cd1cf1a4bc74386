#include "sweepmap/oracle.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "sweepmap/error.hpp"
#include "sweepmap/inverse.hpp"

namespace sweepmap {

namespace {

void check_budget(int n, int budget) {
  if (n > budget) {
    throw SweepError(ErrorCode::kBudgetExceeded,
                     "n = " + std::to_string(n) +
                         " exceeds the enumeration budget " +
                         std::to_string(budget));
  }
}

// Per-path checks that need no knowledge of other paths.
struct PathOutcome {
  std::string sigma;
  std::vector<Counterexample> failures;
  bool roundtrip_ok = true;
  bool inheritance_ok = true;
  bool level_bounds_ok = true;
};

PathOutcome check_path(const DyckPath& path) {
  PathOutcome out;
  const int n = path.n();
  const SweptWord swept = sweep_map(path, ScanDirection::kRightToLeft);
  out.sigma = swept.sigma;

  try {
    if (invert_sweep(swept.sigma) != path) {
      out.roundtrip_ok = false;
      out.failures.push_back({path.word(), "ROUNDTRIP_MISMATCH"});
    } else if (recover_ranks(swept.sigma) != swept.tau) {
      out.roundtrip_ok = false;
      out.failures.push_back({path.word(), "RANKS_MISMATCH"});
    }
  } catch (const SweepError& e) {
    out.roundtrip_ok = false;
    out.failures.push_back({path.word(), std::string(error_token(e.code()))});
  }

  if (!check_level_inheritance(swept).pass) {
    out.inheritance_ok = false;
    out.failures.push_back({path.word(), "LEVEL_INHERITANCE"});
  }

  const Level low = 2 * Level{n};
  const Level high = 2 * Level{n} * n;
  const Level peak = max_level(path);
  const Level tau_peak = swept.tau.back();
  if (peak < low || peak > high || tau_peak != peak) {
    out.level_bounds_ok = false;
    out.failures.push_back({path.word(), "LEVEL_BOUNDS"});
  }
  return out;
}

}  // namespace

std::vector<DyckPath> brute_force_invert(std::string_view sigma, int n,
                                         int budget) {
  check_budget(n, budget);
  std::vector<DyckPath> found;
  if (sigma.size() != 3 * static_cast<std::size_t>(std::max(n, 0))) {
    return found;
  }
  PathEnumerator it(n);
  while (auto path = it.next()) {
    if (sweep_map(*path, ScanDirection::kRightToLeft).sigma == sigma) {
      found.push_back(std::move(*path));
    }
  }
  return found;
}

VerifyReport verify_bijectivity(int n, const VerifyOptions& options) {
  check_budget(n, options.budget);
  const std::vector<DyckPath> paths = enumerate_paths(n);

  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(paths.size()));

  // Contiguous chunks keep the merged outcome list in enumeration order.
  std::vector<PathOutcome> outcomes(paths.size());
  auto run_chunk = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) outcomes[i] = check_path(paths[i]);
  };
  if (workers <= 1) {
    run_chunk(0, paths.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (paths.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < paths.size(); begin += chunk) {
      pool.emplace_back(run_chunk, begin, std::min(paths.size(), begin + chunk));
    }
  }

  VerifyReport report;
  report.n = n;
  report.path_count = paths.size();
  report.injective = true;
  report.roundtrip_ok = true;
  report.inheritance_ok = true;
  report.level_bounds_ok = true;

  std::map<std::string, std::size_t> first_with_sigma;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    PathOutcome& out = outcomes[i];
    auto [pos, inserted] = first_with_sigma.emplace(out.sigma, i);
    if (!inserted) {
      report.injective = false;
      report.counterexamples.push_back({paths[i].word(), "DUPLICATE_SIGMA"});
    }
    report.roundtrip_ok &= out.roundtrip_ok;
    report.inheritance_ok &= out.inheritance_ok;
    report.level_bounds_ok &= out.level_bounds_ok;
    for (auto& f : out.failures) report.counterexamples.push_back(std::move(f));
  }
  report.image_count = first_with_sigma.size();
  return report;
}

std::vector<CollisionGroup> l2r_collision_census(int n, int budget) {
  check_budget(n, budget);
  std::map<std::string, std::vector<std::string>> groups;
  PathEnumerator it(n);
  while (auto path = it.next()) {
    groups[sweep_map(*path, ScanDirection::kLeftToRight).sigma].push_back(
        path->word());
  }
  std::vector<CollisionGroup> census;
  for (auto& [sigma, preimages] : groups) {
    if (preimages.size() >= 2) census.push_back({sigma, std::move(preimages)});
  }
  return census;
}

}  // namespace sweepmap
