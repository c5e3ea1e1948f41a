#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coquat {

struct BenchConfig {
  std::vector<std::int64_t> n_values{10, 100, 1000, 100000, 1000000};
  int reps = 25;
  std::uint64_t seed = 42;
};

/// Rows per method and n.
struct BenchRow {
  std::int64_t n = 0;
  std::string method;  // "closed" or "naive"
  double median_ns = 0.0;
  /// Largest |closed - naive| entry over samples where both stayed finite.
  double max_abs_diff = 0.0;
  /// Largest max-abs entry of the naive result over the same samples.
  double scale = 1.0;
  /// Samples where both results stayed finite and were compared.
  int compared = 0;
  /// Samples where either method left the doubles.
  int overflowed = 0;
  bool pass = true;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Rejected draws (lightlike, or no polar form) that were redrawn.
  int resampled = 0;
};

/// Cross-check tolerance on max_abs_diff, relative to max(1, scale).
double bench_tolerance(std::int64_t n) noexcept;

/// Times left_pow_closed against mat_pow_naive on `reps` random unit-norm
/// split quaternions drawn from `seed`. Throws Error(InvalidArgument) for
/// n <= 0 or reps < 1.
BenchReport bench_pow(const BenchConfig& cfg);

/// CSV with header "n,method,median_ns,max_abs_diff". The last column holds
/// the number, "FAIL" when the cross-check misses its tolerance, or
/// "overflow" when every sample left the doubles.
std::string bench_csv(const BenchReport& report);

}  // namespace coquat
