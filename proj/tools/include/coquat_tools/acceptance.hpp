#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace coquat::acceptance {

struct Options {
  std::uint64_t seed = 20240611;
  /// Include the timing criterion (needs an optimized build to be meaningful).
  bool performance = true;
  int bench_reps = 11;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Golden expression cases compiled into the binary.
std::string_view golden_json();

/// Runs every acceptance criterion and returns one result per criterion.
std::vector<CriterionResult> run_all(const Options& opts = {});

/// Prints "PASS|FAIL [id] name: detail" per criterion; returns true iff all pass.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace coquat::acceptance
