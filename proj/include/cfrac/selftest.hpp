#pragma once

// Built-in invariant suite driven by `cfrac selftest`.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cfrac::selftest {

struct Options {
  std::uint64_t seed = 42;
  std::string filter;  ///< substring of check names; empty runs everything
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      ///< largest observed error (or bound violation)
  double tolerance = 0.0;
  std::string note;
};

std::vector<std::string> check_names();

std::vector<CheckResult> run(const Options& opts);

/// Prints one fixed-format line per check plus a summary line.
void print_table(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace cfrac::selftest
