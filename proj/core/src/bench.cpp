#include "coquat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "coquat/demoivre.hpp"
#include "coquat/error.hpp"

namespace coquat {
namespace {

template <typename T>
inline void keep(const T& value) {
  asm volatile("" : : "g"(&value) : "memory");
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

SplitQuaternion draw(std::mt19937_64& rng, int& resampled) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (;;) {
    const SplitQuaternion q(dist(rng), dist(rng), dist(rng), dist(rng));
    try {
      decompose(q);
      return normalize(q);
    } catch (const Error&) {
      ++resampled;
    }
  }
}

}  // namespace

double bench_tolerance(std::int64_t n) noexcept {
  return n <= 20 ? 1e-9 : 1e-9 * (static_cast<double>(n) / 20.0);
}

BenchReport bench_pow(const BenchConfig& cfg) {
  if (cfg.reps < 1) throw Error(ErrorCode::InvalidArgument, "bench needs reps >= 1");
  for (std::int64_t n : cfg.n_values) {
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "bench exponents must be positive");
  }

  using Clock = std::chrono::steady_clock;
  BenchReport report;
  std::mt19937_64 rng(cfg.seed);

  for (std::int64_t n : cfg.n_values) {
    std::vector<double> closed_ns;
    std::vector<double> naive_ns;
    BenchRow closed{n, "closed"};
    BenchRow naive{n, "naive"};
    bool pass = true;

    for (int rep = 0; rep < cfg.reps; ++rep) {
      const SplitQuaternion q = draw(rng, report.resampled);

      const auto t0 = Clock::now();
      const Mat4 fast = unchecked::left_pow_closed(q, n);
      keep(fast);
      const auto t1 = Clock::now();
      const Mat4 slow = unchecked::mat_pow_naive(left_matrix(q), n);
      keep(slow);
      const auto t2 = Clock::now();

      closed_ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
      naive_ns.push_back(std::chrono::duration<double, std::nano>(t2 - t1).count());

      if (!unchecked::all_finite(fast) || !unchecked::all_finite(slow)) {
        ++closed.overflowed;
        continue;
      }
      ++closed.compared;
      const double diff = mat_max_abs_diff(fast, slow);
      const double scale = std::max(1.0, slow.max_abs());
      closed.max_abs_diff = std::max(closed.max_abs_diff, diff);
      closed.scale = std::max(closed.scale, scale);
      if (diff > bench_tolerance(n) * scale) pass = false;
    }

    closed.median_ns = median(closed_ns);
    naive.median_ns = median(naive_ns);
    closed.pass = pass;
    naive.max_abs_diff = closed.max_abs_diff;
    naive.scale = closed.scale;
    naive.overflowed = closed.overflowed;
    naive.compared = closed.compared;
    naive.pass = pass;
    report.rows.push_back(closed);
    report.rows.push_back(naive);
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::string out = "n,method,median_ns,max_abs_diff\n";
  for (const BenchRow& row : report.rows) {
    out += std::to_string(row.n) + "," + row.method + "," + format_number(std::round(row.median_ns)) + ",";
    if (!row.pass) {
      out += "FAIL";
    } else if (row.compared == 0) {
      out += "overflow";
    } else {
      out += format_number(row.max_abs_diff);
    }
    out += '\n';
  }
  return out;
}

}  // namespace coquat
