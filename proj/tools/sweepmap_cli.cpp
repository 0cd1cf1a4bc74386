// Command-line front end. Talks to the library only through sweepmap.h.

#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sweepmap/sweepmap.h"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kInvalidInput = 1, kInternal = 2 };

// Thrown inside a subcommand; main turns it into a diagnostic and exit code.
struct CliFailure {
  Exit code;
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PathPtr = std::unique_ptr<sm_path, Deleter<sm_path, sm_path_free>>;
using SweptPtr = std::unique_ptr<sm_swept, Deleter<sm_swept, sm_swept_free>>;
using EnumPtr =
    std::unique_ptr<sm_enumerator, Deleter<sm_enumerator, sm_enumerator_free>>;
using ReportPtr = std::unique_ptr<sm_report, Deleter<sm_report, sm_report_free>>;
using CensusPtr = std::unique_ptr<sm_census, Deleter<sm_census, sm_census_free>>;

bool is_internal(sm_status st) {
  switch (st) {
    case SM_STUCK_ZERO_DIFFERENCE:
    case SM_BLOCK_OVERRUN:
    case SM_NO_ENTRY_AT_LEVEL:
    case SM_RESULT_NOT_DYCK:
    case SM_INTERNAL:
      return true;
    default:
      return false;
  }
}

void check(sm_status st) {
  if (st == SM_OK) return;
  throw CliFailure{is_internal(st) ? kInternal : kInvalidInput, sm_last_error()};
}

struct Options {
  std::optional<int> n;
  std::optional<int> max_n;
  std::string path;
  std::string sigma;
  std::string direction = "right-to-left";
  bool json = false;
  bool count_only = false;
  int budget = 0;
  unsigned workers = 1;
};

std::string join(const std::vector<int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// n from the flag, else from the word length.
int resolve_n(const Options& opt, const std::string& word) {
  if (opt.n) return *opt.n;
  if (word.empty() || word.size() % 3 != 0) {
    throw CliFailure{kInvalidInput,
                     "WRONG_LENGTH: cannot infer n from a word of length " +
                         std::to_string(word.size())};
  }
  return static_cast<int>(word.size() / 3);
}

void check_sigma_n(const Options& opt, const std::string& sigma) {
  if (opt.n && sigma.size() != 3 * static_cast<std::size_t>(*opt.n)) {
    throw CliFailure{kInvalidInput,
                     "WRONG_LENGTH: expected " + std::to_string(3 * *opt.n) +
                         " letters for n=" + std::to_string(*opt.n) + ", got " +
                         std::to_string(sigma.size())};
  }
}

PathPtr parse_path(const Options& opt) {
  sm_path* raw = nullptr;
  check(sm_path_create(resolve_n(opt, opt.path), opt.path.c_str(), &raw));
  return PathPtr(raw);
}

std::vector<int64_t> swept_tau(const sm_swept* swept) {
  std::size_t len = 0;
  check(sm_swept_tau(swept, nullptr, 0, &len));
  std::vector<int64_t> tau(len);
  check(sm_swept_tau(swept, tau.data(), tau.size(), &len));
  return tau;
}

void run_sweep(const Options& opt) {
  PathPtr path = parse_path(opt);
  const sm_direction dir =
      opt.direction == "left-to-right" ? SM_LEFT_TO_RIGHT : SM_RIGHT_TO_LEFT;
  sm_swept* raw = nullptr;
  check(sm_sweep(path.get(), dir, &raw));
  SweptPtr swept(raw);
  const std::vector<int64_t> tau = swept_tau(swept.get());
  if (opt.json) {
    std::cout << json{{"n", sm_swept_n(swept.get())},
                      {"direction", opt.direction},
                      {"path", opt.path},
                      {"sigma", sm_swept_sigma(swept.get())},
                      {"tau", tau}}
                     .dump()
              << '\n';
  } else {
    std::cout << "sigma=" << sm_swept_sigma(swept.get()) << '\n'
              << "tau=" << join(tau) << '\n';
  }
}

void run_ranks(const Options& opt) {
  check_sigma_n(opt, opt.sigma);
  std::size_t len = 0;
  check(sm_recover_ranks(opt.sigma.c_str(), nullptr, 0, &len));
  std::vector<int64_t> tau(len);
  check(sm_recover_ranks(opt.sigma.c_str(), tau.data(), tau.size(), &len));
  if (opt.json) {
    std::cout << json{{"sigma", opt.sigma}, {"tau", tau}}.dump() << '\n';
  } else {
    std::cout << "tau=" << join(tau) << '\n';
  }
}

void run_invert(const Options& opt) {
  check_sigma_n(opt, opt.sigma);
  sm_path* raw = nullptr;
  check(sm_invert_sweep(opt.sigma.c_str(), &raw));
  PathPtr path(raw);

  // The inverse must sweep back to the input.
  sm_swept* swept_raw = nullptr;
  check(sm_sweep(path.get(), SM_RIGHT_TO_LEFT, &swept_raw));
  SweptPtr swept(swept_raw);
  if (opt.sigma != sm_swept_sigma(swept.get())) {
    throw CliFailure{kInternal, std::string("INTERNAL: ") +
                                    sm_path_word(path.get()) +
                                    " sweeps to " +
                                    sm_swept_sigma(swept.get())};
  }

  if (opt.json) {
    std::cout << json{{"sigma", opt.sigma}, {"path", sm_path_word(path.get())}}
                     .dump()
              << '\n';
  } else {
    std::cout << "path=" << sm_path_word(path.get()) << '\n';
  }
}

void run_enumerate(const Options& opt) {
  const int n = *opt.n;
  sm_enumerator* raw = nullptr;
  check(sm_enumerator_create(n, &raw));
  EnumPtr it(raw);
  std::vector<std::string> words;
  std::uint64_t count = 0;
  for (;;) {
    sm_path* p = nullptr;
    check(sm_enumerator_next(it.get(), &p));
    if (p == nullptr) break;
    PathPtr path(p);
    ++count;
    if (!opt.count_only) {
      if (opt.json) {
        words.emplace_back(sm_path_word(p));
      } else {
        std::cout << sm_path_word(p) << '\n';
      }
    }
  }
  if (opt.json) {
    json out{{"n", n}, {"count", count}};
    if (!opt.count_only) out["paths"] = words;
    std::cout << out.dump() << '\n';
  } else if (opt.count_only) {
    std::cout << "count=" << count << '\n';
  }
}

const char* flag(int v) { return v ? "true" : "false"; }

void run_verify(const Options& opt) {
  const int first = opt.n ? *opt.n : 1;
  const int last = opt.n ? *opt.n : *opt.max_n;
  bool all_ok = true;
  json reports = json::array();
  for (int n = first; n <= last; ++n) {
    sm_report* raw = nullptr;
    check(sm_verify(n, opt.budget, opt.workers, &raw));
    ReportPtr report(raw);
    const sm_report* r = report.get();
    const bool ok = sm_report_injective(r) && sm_report_roundtrip_ok(r) &&
                    sm_report_inheritance_ok(r) && sm_report_level_bounds_ok(r);
    all_ok = all_ok && ok;

    json counterexamples = json::array();
    for (std::size_t i = 0; i < sm_report_counterexample_count(r); ++i) {
      const char* word = nullptr;
      const char* kind = nullptr;
      check(sm_report_counterexample(r, i, &word, &kind));
      counterexamples.push_back({{"path", word}, {"kind", kind}});
    }
    if (opt.json) {
      reports.push_back({{"n", n},
                         {"paths", sm_report_path_count(r)},
                         {"images", sm_report_image_count(r)},
                         {"injective", sm_report_injective(r) != 0},
                         {"roundtrip", sm_report_roundtrip_ok(r) != 0},
                         {"thm32", sm_report_inheritance_ok(r) != 0},
                         {"prop31", sm_report_level_bounds_ok(r) != 0},
                         {"counterexamples", counterexamples}});
    } else {
      std::cout << "n=" << n << " paths=" << sm_report_path_count(r)
                << " injective=" << flag(sm_report_injective(r))
                << " roundtrip=" << flag(sm_report_roundtrip_ok(r))
                << " thm32=" << flag(sm_report_inheritance_ok(r))
                << " prop31=" << flag(sm_report_level_bounds_ok(r)) << '\n';
      for (const auto& c : counterexamples) {
        std::cout << "  counterexample path=" << c["path"].get<std::string>()
                  << " kind=" << c["kind"].get<std::string>() << '\n';
      }
    }
  }
  if (opt.json) {
    json out = opt.n ? reports[0] : json{{"reports", reports}};
    std::cout << out.dump() << '\n';
  }
  if (!all_ok) {
    throw CliFailure{kInternal, "INTERNAL: exhaustive verification failed"};
  }
}

void run_collide(const Options& opt) {
  const int n = *opt.n;
  sm_census* raw = nullptr;
  check(sm_collision_census(n, opt.budget, &raw));
  CensusPtr census(raw);
  json groups = json::array();
  for (std::size_t i = 0; i < sm_census_size(census.get()); ++i) {
    std::vector<std::string> preimages;
    for (std::size_t j = 0; j < sm_census_preimage_count(census.get(), i); ++j) {
      preimages.emplace_back(sm_census_preimage(census.get(), i, j));
    }
    groups.push_back({{"sigma", sm_census_sigma(census.get(), i)},
                      {"count", preimages.size()},
                      {"preimages", preimages}});
  }
  if (opt.json) {
    std::cout << json{{"n", n}, {"direction", "left-to-right"},
                      {"collisions", groups}}
                     .dump()
              << '\n';
    return;
  }
  std::cout << "n=" << n << " collisions=" << groups.size() << '\n';
  for (const auto& g : groups) {
    std::cout << "sigma=" << g["sigma"].get<std::string>()
              << " count=" << g["count"].get<std::size_t>() << " preimages=";
    const auto& pre = g["preimages"];
    for (std::size_t j = 0; j < pre.size(); ++j) {
      std::cout << (j ? "," : "") << pre[j].get<std::string>();
    }
    std::cout << '\n';
  }
}

void run_render(const Options& opt) {
  PathPtr path = parse_path(opt);
  char* drawing = nullptr;
  check(sm_path_render(path.get(), &drawing));
  std::string text(drawing);
  sm_string_free(drawing);
  if (opt.json) {
    std::cout << json{{"n", sm_path_n(path.get())},
                      {"path", sm_path_word(path.get())},
                      {"max_level", sm_path_max_level(path.get())},
                      {"drawing", text}}
                     .dump()
              << '\n';
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sweep map on (2n,n)-Dyck paths: forward map, inversion, "
               "exhaustive verification"};
  app.require_subcommand(1);
  Options opt;

  const std::map<std::string, std::string> directions{
      {"right-to-left", "right-to-left"}, {"r2l", "right-to-left"},
      {"left-to-right", "left-to-right"}, {"l2r", "left-to-right"}};
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Emit one JSON object on one line");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget,
                    "Largest n allowed to enumerate (default " +
                        std::to_string(sm_default_budget()) + ")")
        ->check(CLI::PositiveNumber);
  };

  auto* sweep = app.add_subcommand("sweep", "Apply the sweep map to a path");
  sweep->add_option("--path", opt.path, "Path word over {N,E}")->required();
  sweep->add_option("--n", opt.n, "Path parameter (inferred when omitted)");
  sweep->add_option("--direction", opt.direction, "right-to-left or left-to-right")
      ->transform(CLI::CheckedTransformer(directions));
  add_json(sweep);

  auto* ranks = app.add_subcommand("ranks", "Recover tau from a sweep word");
  ranks->add_option("--sigma", opt.sigma, "Sweep word over {S,W}")->required();
  ranks->add_option("--n", opt.n, "Path parameter (inferred when omitted)");
  add_json(ranks);

  auto* invert = app.add_subcommand("invert", "Recover the path from a sweep word");
  invert->add_option("--sigma", opt.sigma, "Sweep word over {S,W}")->required();
  invert->add_option("--n", opt.n, "Path parameter (inferred when omitted)");
  add_json(invert);

  auto* enumerate = app.add_subcommand("enumerate", "List every path for n");
  enumerate->add_option("--n", opt.n, "Path parameter")->required();
  enumerate->add_flag("--count-only", opt.count_only, "Print only the count");
  add_json(enumerate);

  auto* verify = app.add_subcommand("verify", "Exhaustively check every path for n");
  auto* verify_n = verify->add_option("--n", opt.n, "Single n");
  auto* verify_max = verify->add_option("--max-n", opt.max_n, "Check n = 1..max-n")
                         ->check(CLI::PositiveNumber);
  verify_n->excludes(verify_max);
  verify->add_option("--workers", opt.workers, "Worker threads, 0 = all cores");
  add_budget(verify);
  add_json(verify);

  auto* collide = app.add_subcommand(
      "collide", "List left-to-right sweep words with several preimages");
  collide->add_option("--n", opt.n, "Path parameter")->required();
  add_budget(collide);
  add_json(collide);

  auto* render = app.add_subcommand("render", "Draw a path on its lattice grid");
  render->add_option("--path", opt.path, "Path word over {N,E}")->required();
  render->add_option("--n", opt.n, "Path parameter (inferred when omitted)");
  add_json(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*sweep) run_sweep(opt);
    else if (*ranks) run_ranks(opt);
    else if (*invert) run_invert(opt);
    else if (*enumerate) run_enumerate(opt);
    else if (*verify) {
      if (!opt.n && !opt.max_n) {
        throw CliFailure{kInvalidInput, "INVALID_ARGUMENT: verify needs --n or --max-n"};
      }
      run_verify(opt);
    }
    else if (*collide) run_collide(opt);
    else if (*render) run_render(opt);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kOk;
}
