// One PASS/FAIL line per acceptance criterion. Exit status is 0 when the failing criteria are exactly
// the ones listed with --known-red, so a newly failing or newly passing criterion breaks the test.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <set>

#include "mlfrac/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string profile = "strict";
  std::vector<int> known_red, only;
  int threads = 0;
  app.add_option("--profile", profile)->check(CLI::IsMember({"fast", "strict"}));
  app.add_option("--known-red", known_red, "criteria expected to fail");
  app.add_option("--only", only, "run these criteria only");
  app.add_option("--threads", threads);
  CLI11_PARSE(app, argc, argv);

  mlfrac::AcceptanceOptions opts;
  opts.profile = mlfrac::parse_profile(profile);
  opts.threads = threads;

  std::set<int> failing;
  for (int c = 1; c <= mlfrac::kCriteriaCount; ++c) {
    if (!only.empty() && std::find(only.begin(), only.end(), c) == only.end()) continue;
    const std::vector<mlfrac::Check> checks = mlfrac::run_criterion(c, opts);
    bool pass = true;
    for (const auto& k : checks) pass = pass && k.status != "fail";
    if (!pass) failing.insert(c);
    std::printf("criterion %2d: %s (%.1f s)\n", c, pass ? "PASS" : "FAIL", checks.front().seconds);
    for (const auto& k : checks)
      std::printf("    %-16s %-7s observed %.17g  %s\n", k.id.c_str(), k.status.c_str(), k.observed, k.detail.c_str());
    std::fflush(stdout);
  }

  std::set<int> expected;
  for (int c : known_red)
    if (only.empty() || std::find(only.begin(), only.end(), c) != only.end()) expected.insert(c);
  if (failing != expected) {
    std::printf("failing criteria differ from the known-red list\n");
    return 1;
  }
  if (!failing.empty()) std::printf("known-red criteria fail as recorded: %zu\n", failing.size());
  return 0;
}
