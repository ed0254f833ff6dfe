#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "promonad/suites.hpp"

using namespace promonad;

TEST_CASE("every suite passes on the default configuration") {
  auto results = run_law_suites(SuiteConfig{});
  CHECK(all_passed(results));
  for (const auto& r : results) {
    INFO(r.name << ": " << r.counterexample);
    CHECK(r.passed);
  }
}

TEST_CASE("zero cases pass vacuously") {
  auto results = run_law_suites(SuiteConfig{42, 0});
  CHECK(all_passed(results));
  CHECK(format_report(results).find("FAIL") == std::string::npos);
}

TEST_CASE("reports are deterministic per seed") {
  SuiteConfig config{7, 50};
  CHECK(format_report(run_law_suites(config)) == format_report(run_law_suites(config)));
}

TEST_CASE("a broken character biparser is caught") {
  // Prints every character as 'x'.
  SuiteFixtures broken{mk_biparser<char32_t, char32_t>(
      [](TextView s) -> Parsed<char32_t> {
        if (s.empty()) return std::nullopt;
        return std::pair(s.front(), s.substr(1));
      },
      [](const char32_t& c) -> Printed<char32_t> { return std::pair(c, Text(1, U'x')); })};
  auto results = run_law_suites(SuiteConfig{42, 200}, broken);
  CHECK_FALSE(all_passed(results));
  bool caught = false;
  for (const auto& r : results)
    if (r.name == "biparser: backward round tripping (char)") {
      caught = !r.passed && !r.counterexample.empty();
    }
  CHECK(caught);
  auto report = format_report(results);
  CHECK(report.find("FAIL biparser: backward round tripping (char)") != std::string::npos);
}
