#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "reference.hpp"
#include "sweepmap/error.hpp"
#include "sweepmap/inverse.hpp"
#include "sweepmap/sweep.hpp"

using namespace sweepmap;

namespace {

template <typename F>
SweepError caught(F&& f) {
  try {
    f();
  } catch (const SweepError& e) {
    return e;
  }
  FAIL("expected SweepError");
  return SweepError(ErrorCode::kInvalidSigma, "");
}

}  // namespace

TEST_CASE("rank recovery on known words") {
  CHECK(recover_ranks("SWSSWWWWW") == std::vector<Level>{0, 3, 3, 3, 6, 6, 6, 9, 9});
  CHECK(recover_ranks("SWW") == std::vector<Level>{0, 1, 2});
  CHECK(recover_ranks("SSWWWW") == std::vector<Level>{0, 0, 2, 2, 4, 4});
  // The last one is the sweep of the sawtooth, computed by a literal scan.
  CHECK(reference::scan_sweep(2, "NEENEE", true).second ==
        std::vector<std::int64_t>{0, 0, 2, 2, 4, 4});
}

TEST_CASE("rank recovery trace for the worked example") {
  std::vector<RecoveryStep> trace;
  recover_ranks("SWSSWWWWW", &trace);
  REQUIRE(trace.size() == 3);
  // One 0, no -6: one W at 3.
  CHECK(trace[0].position == 2);
  CHECK(trace[0].same_level == 1);
  CHECK(trace[0].south_below == 0);
  CHECK(trace[0].assigned == 3);
  CHECK(trace[0].block == 1);
  // Three 3s, no -3: three Ws at 6.
  CHECK(trace[1].position == 5);
  CHECK(trace[1].same_level == 3);
  CHECK(trace[1].assigned == 6);
  CHECK(trace[1].block == 3);
  // Three 6s and one S at 0: two Ws at 9.
  CHECK(trace[2].position == 8);
  CHECK(trace[2].same_level == 3);
  CHECK(trace[2].south_below == 1);
  CHECK(trace[2].assigned == 9);
  CHECK(trace[2].block == 2);
}

TEST_CASE("reconstruction consumes right-most entries") {
  CHECK(reconstruct_path("SWSSWWWWW", {0, 3, 3, 3, 6, 6, 6, 9, 9}).word() ==
        "NENEENEEE");
  CHECK(reconstruct_path("SWW", {0, 1, 2}).word() == "NEE");
  CHECK(reconstruct_path("SSWWWW", {0, 0, 2, 2, 4, 4}).word() == "NEENEE");
}

TEST_CASE("invert_sweep end to end") {
  CHECK(invert_sweep("SWSSWWWWW").word() == "NENEENEEE");
  CHECK(invert_sweep("SWW").word() == "NEE");
  CHECK(invert_sweep("SSWWWW").word() == "NEENEE");
}

TEST_CASE("malformed sigma") {
  auto e = caught([] { recover_ranks("WSW"); });
  CHECK(e.code() == ErrorCode::kInvalidSigma);
  CHECK(std::string(e.what()).find("BELOW_ZERO") != std::string::npos);

  e = caught([] { recover_ranks("SSW"); });
  CHECK(e.code() == ErrorCode::kInvalidSigma);
  CHECK(std::string(e.what()).find("WRONG_COUNTS") != std::string::npos);

  e = caught([] { recover_ranks("SWWW"); });
  CHECK(std::string(e.what()).find("WRONG_LENGTH") != std::string::npos);

  e = caught([] { recover_ranks(""); });
  CHECK(e.code() == ErrorCode::kInvalidSigma);

  e = caught([] { invert_sweep("NEE"); });
  CHECK(e.code() == ErrorCode::kInvalidSigma);
  CHECK(std::string(e.what()).find("INVALID_LETTER") != std::string::npos);
}

TEST_CASE("reconstruction rejects inconsistent pairs") {
  CHECK(caught([] { reconstruct_path("SWW", {0, 1}); }).code() ==
        ErrorCode::kInvalidRanks);
  CHECK(caught([] { reconstruct_path("SWW", {0, 2, 1}); }).code() ==
        ErrorCode::kInvalidRanks);
  CHECK(caught([] { reconstruct_path("SWSSWWWWW", {0, 3, 3, 3, 6, 6, 6, 9, 10}); })
            .code() == ErrorCode::kInvalidRanks);
  CHECK(caught([] { reconstruct_path("SXW", {0, 1, 2}); }).code() ==
        ErrorCode::kInvalidSigma);
  CHECK(caught([] { reconstruct_path("SW", {0, 1}); }).code() ==
        ErrorCode::kInvalidSigma);

  // Nothing at level 2 once the first N is taken.
  auto e = caught([] { reconstruct_path("SWW", {0, 1, 1}); });
  CHECK(e.code() == ErrorCode::kNoEntryAtLevel);
  CHECK(e.position() == 2u);

  // All entries consumed but the emitted word ends above zero.
  e = caught([] { reconstruct_path("SSWWWW", {0, 2, 2, 4, 4, 6}); });
  CHECK((e.code() == ErrorCode::kNoEntryAtLevel ||
         e.code() == ErrorCode::kResultNotDyck));
}

TEST_CASE("reconstruction can emit a non-path") {
  // Levels are consistent step by step but the counts come out wrong.
  auto e = caught([] { reconstruct_path("WWS", {0, 0, 0}); });
  CHECK(e.code() == ErrorCode::kNoEntryAtLevel);
  e = caught([] { reconstruct_path("SSS", {0, 2, 4}); });
  CHECK(e.code() == ErrorCode::kResultNotDyck);
}

TEST_CASE("round trips over every path, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    for (const auto& p : enumerate_paths(n)) {
      const auto w = sweep_map(p);
      std::vector<RecoveryStep> trace;
      const auto tau = recover_ranks(w.sigma, &trace);
      CHECK(tau == w.tau);
      CHECK(invert_sweep(w.sigma) == p);
      CHECK(reconstruct_path(w.sigma, tau) == p);

      CHECK(tau.front() == 0);
      CHECK(std::is_sorted(tau.begin(), tau.end()));
      for (std::size_t i = 0; i < tau.size(); ++i) {
        CHECK(tau[i] % n == 0);
        if (i > 0 && w.sigma[i] == 'S') CHECK(tau[i] == tau[i - 1]);
        // No W sits at level 0.
        if (w.sigma[i] == 'W') CHECK(tau[i] > 0);
      }
      for (const auto& step : trace) {
        CHECK(step.difference() > 0);
        CHECK_FALSE(step.filled_beyond_cursor);
      }
    }
  }
}

TEST_CASE("random round trips beyond the exhaustive range") {
  std::mt19937_64 rng(20161018);
  for (int n : {7, 9, 12, 16, 20, 25}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::string word = reference::random_path(n, rng);
      CAPTURE(word);
      const auto p = DyckPath::validate(n, word);
      const auto w = sweep_map(p);
      CHECK(recover_ranks(w.sigma) == w.tau);
      CHECK(invert_sweep(w.sigma) == p);
    }
  }
}
