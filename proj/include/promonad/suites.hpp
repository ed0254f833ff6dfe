#pragma once

// Registry of the executable law and round-tripping suites, shared by the
// `laws` CLI command and the test binaries.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "promonad/biparser.hpp"

namespace promonad {

struct SuiteConfig {
  std::uint64_t seed = 42;
  /// Random cases per property; 0 makes every suite vacuously pass.
  std::size_t cases = 1000;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;
};

/// Values the suites are run against. Tests substitute broken versions to
/// check that the suites notice.
struct SuiteFixtures {
  Biparser<char32_t, char32_t> character = biparsers::character();
};

std::vector<SuiteResult> run_law_suites(const SuiteConfig& config, const SuiteFixtures& fixtures = {});

/// One line per suite: `PASS <name> (<n> cases)` or `FAIL <name> (<n> cases): <counterexample>`.
std::string format_report(const std::vector<SuiteResult>& results);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace promonad
