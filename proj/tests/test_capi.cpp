// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "sweepmap/sweepmap.h"

namespace {

std::vector<int64_t> tau_of(const sm_swept* s) {
  size_t len = 0;
  REQUIRE(sm_swept_tau(s, nullptr, 0, &len) == SM_OK);
  std::vector<int64_t> out(len);
  REQUIRE(sm_swept_tau(s, out.data(), out.size(), &len) == SM_OK);
  return out;
}

}  // namespace

TEST_CASE("path handle lifecycle") {
  sm_path* p = nullptr;
  REQUIRE(sm_path_create(3, "NENEENEEE", &p) == SM_OK);
  CHECK(sm_path_n(p) == 3);
  CHECK(std::string(sm_path_word(p)) == "NENEENEEE");
  CHECK(sm_path_max_level(p) == 9);

  size_t len = 0;
  REQUIRE(sm_path_levels(p, nullptr, 0, &len) == SM_OK);
  CHECK(len == 10);
  std::vector<int64_t> levels(len);
  REQUIRE(sm_path_levels(p, levels.data(), levels.size(), &len) == SM_OK);
  CHECK(levels == std::vector<int64_t>{0, 6, 3, 9, 6, 3, 9, 6, 3, 0});

  // A short buffer receives a prefix and the full length.
  int64_t head[3];
  REQUIRE(sm_path_levels(p, head, 3, &len) == SM_OK);
  CHECK(len == 10);
  CHECK(head[2] == 3);

  char letters[9];
  int64_t label_levels[9];
  REQUIRE(sm_path_labels(p, letters, label_levels, 9, &len) == SM_OK);
  CHECK(std::string(letters, 9) == "SWSWWSWWW");
  CHECK(label_levels[3] == 9);
  sm_path_free(p);
}

TEST_CASE("status codes and last error") {
  sm_path* p = nullptr;
  CHECK(sm_path_create(1, "ENE", &p) == SM_BELOW_ZERO);
  CHECK(p == nullptr);
  CHECK(std::string(sm_last_error()).rfind("BELOW_ZERO(1)", 0) == 0);
  CHECK(sm_last_error_position() == 1);

  CHECK(sm_path_create(1, "NNE", &p) == SM_WRONG_COUNTS);
  CHECK(sm_path_create(2, "NEE", &p) == SM_WRONG_LENGTH);
  CHECK(sm_path_create(1, "SWW", &p) == SM_INVALID_LETTER);
  CHECK(sm_path_create(1, nullptr, &p) == SM_INVALID_ARGUMENT);
  CHECK(sm_path_create(1, "NEE", nullptr) == SM_INVALID_ARGUMENT);
  CHECK(sm_path_collision_witness_a(1, &p) == SM_N_TOO_SMALL);

  CHECK(std::string(sm_status_token(SM_STUCK_ZERO_DIFFERENCE)) ==
        "STUCK_ZERO_DIFFERENCE");
  CHECK(std::string(sm_status_token(SM_BLOCK_OVERRUN)) == "BLOCK_OVERRUN");

  // Success clears the previous message.
  REQUIRE(sm_path_create(1, "NEE", &p) == SM_OK);
  CHECK(std::string(sm_last_error()).empty());
  sm_path_free(p);
}

TEST_CASE("last error is per thread") {
  sm_path* p = nullptr;
  CHECK(sm_path_create(1, "ENE", &p) == SM_BELOW_ZERO);
  std::thread([] {
    sm_path* q = nullptr;
    CHECK(sm_path_create(1, "NNE", &q) == SM_WRONG_COUNTS);
  }).join();
  CHECK(std::string(sm_last_error()).rfind("BELOW_ZERO", 0) == 0);
}

TEST_CASE("sweep, ranks and inversion through the C API") {
  sm_path* p = nullptr;
  REQUIRE(sm_path_create(3, "NENEENEEE", &p) == SM_OK);
  sm_swept* s = nullptr;
  REQUIRE(sm_sweep(p, SM_RIGHT_TO_LEFT, &s) == SM_OK);
  CHECK(std::string(sm_swept_sigma(s)) == "SWSSWWWWW");
  CHECK(sm_swept_n(s) == 3);
  const auto tau = tau_of(s);
  CHECK(tau == std::vector<int64_t>{0, 3, 3, 3, 6, 6, 6, 9, 9});

  int pass = 0;
  size_t nviol = 0;
  REQUIRE(sm_swept_check_inheritance(s, &pass, nullptr, 0, &nviol) == SM_OK);
  CHECK(pass == 1);
  CHECK(nviol == 0);

  size_t len = 0;
  std::vector<int64_t> recovered(9);
  REQUIRE(sm_recover_ranks("SWSSWWWWW", recovered.data(), 9, &len) == SM_OK);
  CHECK(recovered == tau);

  sm_path* back = nullptr;
  REQUIRE(sm_reconstruct_path("SWSSWWWWW", tau.data(), tau.size(), &back) == SM_OK);
  CHECK(std::string(sm_path_word(back)) == "NENEENEEE");
  sm_path_free(back);

  REQUIRE(sm_invert_sweep("SWSSWWWWW", &back) == SM_OK);
  CHECK(std::string(sm_path_word(back)) == "NENEENEEE");
  sm_path_free(back);

  CHECK(sm_invert_sweep("WSW", &back) == SM_INVALID_SIGMA);
  CHECK(std::string(sm_last_error()).find("BELOW_ZERO") != std::string::npos);
  CHECK(sm_recover_ranks("SSW", nullptr, 0, &len) == SM_INVALID_SIGMA);

  const int64_t bad[] = {0, 1, 1};
  CHECK(sm_reconstruct_path("SWW", bad, 3, &back) == SM_NO_ENTRY_AT_LEVEL);

  sm_swept* l2r = nullptr;
  REQUIRE(sm_sweep(p, SM_LEFT_TO_RIGHT, &l2r) == SM_OK);
  CHECK(std::string(sm_swept_sigma(l2r)) == "SSSWWWWWW");
  CHECK(sm_sweep(p, static_cast<sm_direction>(7), &l2r) == SM_INVALID_ARGUMENT);

  sm_swept_free(l2r);
  sm_swept_free(s);
  sm_path_free(p);
}

TEST_CASE("constructors") {
  struct Case {
    sm_status (*make)(int, sm_path**);
    int n;
    const char* word;
  };
  for (const Case& c : {Case{sm_path_sawtooth, 2, "NEENEE"},
                        Case{sm_path_staircase, 2, "NNEEEE"},
                        Case{sm_path_collision_witness_a, 3, "NEENEENEE"},
                        Case{sm_path_collision_witness_b, 3, "NENEENEEE"}}) {
    sm_path* p = nullptr;
    REQUIRE(c.make(c.n, &p) == SM_OK);
    CHECK(std::string(sm_path_word(p)) == c.word);
    sm_path_free(p);
  }
}

TEST_CASE("enumerator") {
  sm_enumerator* it = nullptr;
  REQUIRE(sm_enumerator_create(2, &it) == SM_OK);
  std::vector<std::string> words;
  for (;;) {
    sm_path* p = nullptr;
    REQUIRE(sm_enumerator_next(it, &p) == SM_OK);
    if (!p) break;
    words.emplace_back(sm_path_word(p));
    sm_path_free(p);
  }
  sm_enumerator_free(it);
  CHECK(words == std::vector<std::string>{"NNEEEE", "NENEEE", "NEENEE"});
  CHECK(sm_path_count_closed_form(6) == 1428);
  CHECK(sm_enumerator_create(0, &it) == SM_N_TOO_SMALL);
}

TEST_CASE("oracle handles") {
  sm_word_list* list = nullptr;
  REQUIRE(sm_brute_force_invert("SWSSWWWWW", 3, 0, &list) == SM_OK);
  REQUIRE(sm_word_list_size(list) == 1);
  CHECK(std::string(sm_word_list_at(list, 0)) == "NENEENEEE");
  CHECK(sm_word_list_at(list, 1) == nullptr);
  sm_word_list_free(list);
  CHECK(sm_brute_force_invert("SWW", 12, 0, &list) == SM_BUDGET_EXCEEDED);

  sm_report* r = nullptr;
  REQUIRE(sm_verify(4, 0, 2, &r) == SM_OK);
  CHECK(sm_report_n(r) == 4);
  CHECK(sm_report_path_count(r) == 55);
  CHECK(sm_report_image_count(r) == 55);
  CHECK(sm_report_injective(r) == 1);
  CHECK(sm_report_roundtrip_ok(r) == 1);
  CHECK(sm_report_inheritance_ok(r) == 1);
  CHECK(sm_report_level_bounds_ok(r) == 1);
  CHECK(sm_report_counterexample_count(r) == 0);
  const char* w = nullptr;
  const char* k = nullptr;
  CHECK(sm_report_counterexample(r, 0, &w, &k) == SM_OUT_OF_RANGE);
  sm_report_free(r);
  CHECK(sm_verify(9, 0, 1, &r) == SM_BUDGET_EXCEEDED);
  REQUIRE(sm_verify(9, 9, 0, &r) == SM_OK);
  CHECK(sm_report_path_count(r) == 246675);
  sm_report_free(r);

  sm_census* c = nullptr;
  REQUIRE(sm_collision_census(2, 0, &c) == SM_OK);
  REQUIRE(sm_census_size(c) == 1);
  CHECK(std::string(sm_census_sigma(c, 0)) == "SSWWWW");
  CHECK(sm_census_preimage_count(c, 0) == 2);
  CHECK(std::string(sm_census_preimage(c, 0, 1)) == "NEENEE");
  CHECK(sm_census_preimage(c, 0, 2) == nullptr);
  CHECK(sm_census_sigma(c, 1) == nullptr);
  sm_census_free(c);
}

TEST_CASE("render") {
  sm_path* p = nullptr;
  REQUIRE(sm_path_create(1, "NEE", &p) == SM_OK);
  char* drawing = nullptr;
  REQUIRE(sm_path_render(p, &drawing) == SM_OK);
  CHECK(std::string(drawing) == "+---+---+\n|\n+\n");
  sm_string_free(drawing);
  sm_path_free(p);

  REQUIRE(sm_path_create(3, "NENEENEEE", &p) == SM_OK);
  REQUIRE(sm_path_render(p, &drawing) == SM_OK);
  CHECK(std::string(drawing) ==
        ".   .   .   +---+---+---+\n"
        "            |\n"
        ".   +---+---+   ~\n"
        "    |\n"
        "+---+   ~\n"
        "|\n"
        "+\n");
  sm_string_free(drawing);
  sm_path_free(p);
}

TEST_CASE("null handles are tolerated by accessors and free") {
  sm_path_free(nullptr);
  sm_swept_free(nullptr);
  sm_report_free(nullptr);
  sm_census_free(nullptr);
  sm_word_list_free(nullptr);
  sm_enumerator_free(nullptr);
  CHECK(sm_path_n(nullptr) == 0);
  CHECK(std::string(sm_path_word(nullptr)).empty());
  CHECK(sm_census_size(nullptr) == 0);
  size_t len = 0;
  CHECK(sm_path_levels(nullptr, nullptr, 0, &len) == SM_INVALID_ARGUMENT);
}
