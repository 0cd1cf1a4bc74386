#include "sweepmap/sweepmap.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "sweepmap/error.hpp"
#include "sweepmap/inverse.hpp"
#include "sweepmap/oracle.hpp"
#include "sweepmap/path.hpp"
#include "sweepmap/render.hpp"
#include "sweepmap/sweep.hpp"

struct sm_path {
  sweepmap::DyckPath path;
};

struct sm_swept {
  sweepmap::SweptWord word;
};

struct sm_enumerator {
  sweepmap::PathEnumerator it;
};

struct sm_report {
  sweepmap::VerifyReport report;
};

struct sm_census {
  std::vector<sweepmap::CollisionGroup> groups;
};

struct sm_word_list {
  std::vector<std::string> words;
};

namespace {

using sweepmap::ErrorCode;
using sweepmap::SweepError;

thread_local std::string g_last_error;
thread_local std::size_t g_last_position = 0;

sm_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWrongLength: return SM_WRONG_LENGTH;
    case ErrorCode::kWrongCounts: return SM_WRONG_COUNTS;
    case ErrorCode::kBelowZero: return SM_BELOW_ZERO;
    case ErrorCode::kInvalidLetter: return SM_INVALID_LETTER;
    case ErrorCode::kNTooSmall: return SM_N_TOO_SMALL;
    case ErrorCode::kInvalidSigma: return SM_INVALID_SIGMA;
    case ErrorCode::kInvalidRanks: return SM_INVALID_RANKS;
    case ErrorCode::kStuckZeroDifference: return SM_STUCK_ZERO_DIFFERENCE;
    case ErrorCode::kBlockOverrun: return SM_BLOCK_OVERRUN;
    case ErrorCode::kNoEntryAtLevel: return SM_NO_ENTRY_AT_LEVEL;
    case ErrorCode::kResultNotDyck: return SM_RESULT_NOT_DYCK;
    case ErrorCode::kBudgetExceeded: return SM_BUDGET_EXCEEDED;
  }
  return SM_INTERNAL;
}

sm_status fail(sm_status status, std::string message, std::size_t position = 0) {
  g_last_error = std::move(message);
  g_last_position = position;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
sm_status guarded(Body&& body) {
  g_last_error.clear();
  g_last_position = 0;
  try {
    body();
    return SM_OK;
  } catch (const SweepError& e) {
    return fail(to_status(e.code()), e.what(), e.position().value_or(0));
  } catch (const std::bad_alloc&) {
    return fail(SM_INTERNAL, "INTERNAL: out of memory");
  } catch (const std::exception& e) {
    return fail(SM_INTERNAL, std::string("INTERNAL: ") + e.what());
  }
}

sm_status null_argument(const char* what) {
  return fail(SM_INVALID_ARGUMENT,
              std::string("INVALID_ARGUMENT: ") + what + " is null");
}

sm_status copy_levels(const std::vector<sweepmap::Level>& levels, int64_t* out,
                      size_t cap, size_t* len) {
  if (len == nullptr) return null_argument("len");
  if (out == nullptr && cap > 0) return null_argument("out");
  *len = levels.size();
  std::copy_n(levels.begin(), std::min(cap, levels.size()), out);
  return SM_OK;
}

sm_status make_path(sm_path** out, auto&& make) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new sm_path{make()}; });
}

}  // namespace

extern "C" {

const char* sm_status_token(sm_status status) {
  switch (status) {
    case SM_OK: return "OK";
    case SM_WRONG_LENGTH: return "WRONG_LENGTH";
    case SM_WRONG_COUNTS: return "WRONG_COUNTS";
    case SM_BELOW_ZERO: return "BELOW_ZERO";
    case SM_INVALID_LETTER: return "INVALID_LETTER";
    case SM_N_TOO_SMALL: return "N_TOO_SMALL";
    case SM_INVALID_SIGMA: return "INVALID_SIGMA";
    case SM_INVALID_RANKS: return "INVALID_RANKS";
    case SM_STUCK_ZERO_DIFFERENCE: return "STUCK_ZERO_DIFFERENCE";
    case SM_BLOCK_OVERRUN: return "BLOCK_OVERRUN";
    case SM_NO_ENTRY_AT_LEVEL: return "NO_ENTRY_AT_LEVEL";
    case SM_RESULT_NOT_DYCK: return "RESULT_NOT_DYCK";
    case SM_BUDGET_EXCEEDED: return "BUDGET_EXCEEDED";
    case SM_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case SM_OUT_OF_RANGE: return "OUT_OF_RANGE";
    case SM_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* sm_last_error(void) { return g_last_error.c_str(); }
size_t sm_last_error_position(void) { return g_last_position; }
const char* sm_version(void) { return "0.1.0"; }

sm_status sm_path_create(int n, const char* word, sm_path** out) {
  if (word == nullptr) return null_argument("word");
  return make_path(out, [&] { return sweepmap::DyckPath::validate(n, word); });
}

sm_status sm_path_sawtooth(int n, sm_path** out) {
  return make_path(out, [&] { return sweepmap::sawtooth_path(n); });
}

sm_status sm_path_staircase(int n, sm_path** out) {
  return make_path(out, [&] { return sweepmap::staircase_path(n); });
}

sm_status sm_path_collision_witness_a(int n, sm_path** out) {
  return make_path(out, [&] { return sweepmap::collision_witness_a(n); });
}

sm_status sm_path_collision_witness_b(int n, sm_path** out) {
  return make_path(out, [&] { return sweepmap::collision_witness_b(n); });
}

void sm_path_free(sm_path* path) { delete path; }

int sm_path_n(const sm_path* path) { return path ? path->path.n() : 0; }

const char* sm_path_word(const sm_path* path) {
  return path ? path->path.word().c_str() : "";
}

sm_status sm_path_levels(const sm_path* path, int64_t* out, size_t cap,
                         size_t* len) {
  if (path == nullptr) return null_argument("path");
  return copy_levels(sweepmap::level_profile(path->path), out, cap, len);
}

sm_status sm_path_labels(const sm_path* path, char* letters, int64_t* levels,
                         size_t cap, size_t* len) {
  if (path == nullptr) return null_argument("path");
  if (len == nullptr) return null_argument("len");
  if (cap > 0 && (letters == nullptr || levels == nullptr)) {
    return null_argument("letters or levels");
  }
  const auto labels = sweepmap::step_labels(path->path);
  *len = labels.size();
  for (size_t i = 0; i < std::min(cap, labels.size()); ++i) {
    letters[i] = static_cast<char>(labels[i].letter);
    levels[i] = labels[i].level;
  }
  return SM_OK;
}

int64_t sm_path_max_level(const sm_path* path) {
  return path ? sweepmap::max_level(path->path) : 0;
}

sm_status sm_path_render(const sm_path* path, char** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const std::string drawing = sweepmap::render_path(path->path);
    char* buf = static_cast<char*>(std::malloc(drawing.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, drawing.c_str(), drawing.size() + 1);
    *out = buf;
  });
}

void sm_string_free(char* s) { std::free(s); }

sm_status sm_enumerator_create(int n, sm_enumerator** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new sm_enumerator{sweepmap::PathEnumerator(n)}; });
}

sm_status sm_enumerator_next(sm_enumerator* it, sm_path** out) {
  if (it == nullptr) return null_argument("enumerator");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    if (auto path = it->it.next()) *out = new sm_path{std::move(*path)};
  });
}

void sm_enumerator_free(sm_enumerator* it) { delete it; }

uint64_t sm_path_count_closed_form(int n) {
  return sweepmap::path_count_closed_form(n);
}

sm_status sm_sweep(const sm_path* path, sm_direction direction, sm_swept** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (direction != SM_RIGHT_TO_LEFT && direction != SM_LEFT_TO_RIGHT) {
    return fail(SM_INVALID_ARGUMENT, "INVALID_ARGUMENT: unknown direction");
  }
  return guarded([&] {
    const auto dir = direction == SM_LEFT_TO_RIGHT
                         ? sweepmap::ScanDirection::kLeftToRight
                         : sweepmap::ScanDirection::kRightToLeft;
    *out = new sm_swept{sweepmap::sweep_map(path->path, dir)};
  });
}

void sm_swept_free(sm_swept* swept) { delete swept; }

int sm_swept_n(const sm_swept* swept) { return swept ? swept->word.n : 0; }

const char* sm_swept_sigma(const sm_swept* swept) {
  return swept ? swept->word.sigma.c_str() : "";
}

sm_status sm_swept_tau(const sm_swept* swept, int64_t* out, size_t cap,
                       size_t* len) {
  if (swept == nullptr) return null_argument("swept");
  return copy_levels(swept->word.tau, out, cap, len);
}

sm_status sm_swept_check_inheritance(const sm_swept* swept, int* pass,
                                     size_t* out, size_t cap, size_t* len) {
  if (swept == nullptr) return null_argument("swept");
  if (pass == nullptr) return null_argument("pass");
  if (len == nullptr) return null_argument("len");
  if (out == nullptr && cap > 0) return null_argument("out");
  const auto verdict = sweepmap::check_level_inheritance(swept->word);
  *pass = verdict.pass ? 1 : 0;
  *len = verdict.violations.size();
  std::copy_n(verdict.violations.begin(),
              std::min(cap, verdict.violations.size()), out);
  return SM_OK;
}

sm_status sm_recover_ranks(const char* sigma, int64_t* out, size_t cap,
                           size_t* len) {
  if (sigma == nullptr) return null_argument("sigma");
  std::vector<sweepmap::Level> tau;
  const sm_status st = guarded([&] { tau = sweepmap::recover_ranks(sigma); });
  if (st != SM_OK) return st;
  return copy_levels(tau, out, cap, len);
}

sm_status sm_reconstruct_path(const char* sigma, const int64_t* tau, size_t len,
                              sm_path** out) {
  if (sigma == nullptr) return null_argument("sigma");
  if (tau == nullptr && len > 0) return null_argument("tau");
  return make_path(out, [&] {
    return sweepmap::reconstruct_path(
        sigma, std::vector<sweepmap::Level>(tau, tau + len));
  });
}

sm_status sm_invert_sweep(const char* sigma, sm_path** out) {
  if (sigma == nullptr) return null_argument("sigma");
  return make_path(out, [&] { return sweepmap::invert_sweep(sigma); });
}

int sm_default_budget(void) { return sweepmap::kDefaultEnumerationBudget; }

sm_status sm_brute_force_invert(const char* sigma, int n, int budget,
                                sm_word_list** out) {
  if (sigma == nullptr) return null_argument("sigma");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (budget <= 0) budget = sweepmap::kDefaultEnumerationBudget;
  return guarded([&] {
    auto list = std::make_unique<sm_word_list>();
    for (const auto& p : sweepmap::brute_force_invert(sigma, n, budget)) {
      list->words.push_back(p.word());
    }
    *out = list.release();
  });
}

size_t sm_word_list_size(const sm_word_list* list) {
  return list ? list->words.size() : 0;
}

const char* sm_word_list_at(const sm_word_list* list, size_t i) {
  if (list == nullptr || i >= list->words.size()) return nullptr;
  return list->words[i].c_str();
}

void sm_word_list_free(sm_word_list* list) { delete list; }

sm_status sm_verify(int n, int budget, unsigned workers, sm_report** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  sweepmap::VerifyOptions options;
  if (budget > 0) options.budget = budget;
  options.workers = workers;
  return guarded([&] {
    *out = new sm_report{sweepmap::verify_bijectivity(n, options)};
  });
}

void sm_report_free(sm_report* report) { delete report; }

int sm_report_n(const sm_report* r) { return r ? r->report.n : 0; }
uint64_t sm_report_path_count(const sm_report* r) {
  return r ? r->report.path_count : 0;
}
uint64_t sm_report_image_count(const sm_report* r) {
  return r ? r->report.image_count : 0;
}
int sm_report_injective(const sm_report* r) {
  return r && r->report.injective ? 1 : 0;
}
int sm_report_roundtrip_ok(const sm_report* r) {
  return r && r->report.roundtrip_ok ? 1 : 0;
}
int sm_report_inheritance_ok(const sm_report* r) {
  return r && r->report.inheritance_ok ? 1 : 0;
}
int sm_report_level_bounds_ok(const sm_report* r) {
  return r && r->report.level_bounds_ok ? 1 : 0;
}
size_t sm_report_counterexample_count(const sm_report* r) {
  return r ? r->report.counterexamples.size() : 0;
}

sm_status sm_report_counterexample(const sm_report* r, size_t i,
                                   const char** path, const char** kind) {
  if (r == nullptr) return null_argument("report");
  if (path == nullptr || kind == nullptr) return null_argument("path or kind");
  if (i >= r->report.counterexamples.size()) {
    return fail(SM_OUT_OF_RANGE, "OUT_OF_RANGE: counterexample index");
  }
  *path = r->report.counterexamples[i].path.c_str();
  *kind = r->report.counterexamples[i].kind.c_str();
  return SM_OK;
}

sm_status sm_collision_census(int n, int budget, sm_census** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (budget <= 0) budget = sweepmap::kDefaultEnumerationBudget;
  return guarded([&] {
    *out = new sm_census{sweepmap::l2r_collision_census(n, budget)};
  });
}

void sm_census_free(sm_census* census) { delete census; }

size_t sm_census_size(const sm_census* c) { return c ? c->groups.size() : 0; }

const char* sm_census_sigma(const sm_census* c, size_t i) {
  if (c == nullptr || i >= c->groups.size()) return nullptr;
  return c->groups[i].sigma.c_str();
}

size_t sm_census_preimage_count(const sm_census* c, size_t i) {
  if (c == nullptr || i >= c->groups.size()) return 0;
  return c->groups[i].preimages.size();
}

const char* sm_census_preimage(const sm_census* c, size_t i, size_t j) {
  if (c == nullptr || i >= c->groups.size()) return nullptr;
  if (j >= c->groups[i].preimages.size()) return nullptr;
  return c->groups[i].preimages[j].c_str();
}

}  // extern "C"
