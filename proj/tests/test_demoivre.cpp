#include <cmath>
#include <limits>
#include <numbers>

#include "coquat_tools/sampling.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace coquat;
using testing::max_diff;

namespace {

double scale_of(const SplitQuaternion& q, std::int64_t n) {
  return std::max(1.0, std::pow(std::sqrt(q.euclidean_sq()), static_cast<double>(n)));
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("pow_naive") {
  const SplitQuaternion q(1, 2, 1, 0);
  CHECK(pow_naive(q, 0) == SplitQuaternion::one());
  CHECK(pow_naive(SplitQuaternion::unit_i(), 2) == -SplitQuaternion::one());
  CHECK(oracle::power(q.components(), 3) == oracle::Q{-8, 0, 0, 0});
  CHECK(pow_naive(q, 3) == SplitQuaternion(-8, 0, 0, 0));
  CHECK_THROWS_AS(pow_naive(q, -1), Error);
}

TEST_CASE("pow_by_squaring agrees with the oracle and handles negatives") {
  sampling::Sampler s(31);
  for (int t = 0; t < 200; ++t) {
    const SplitQuaternion q = s.box(1.0);
    for (int n = 0; n <= 12; ++n) {
      const oracle::Q want = oracle::power(q.components(), n);
      CHECK(max_diff(pow_by_squaring(q, n), want) <= 1e-12 * scale_of(q, n));
    }
  }
  CHECK(pow_by_squaring(SplitQuaternion::unit_i(), -1) == -SplitQuaternion::unit_i());
  CHECK(code_of([] { pow_by_squaring(SplitQuaternion(1, 0, 1, 0), -2); }) == ErrorCode::NegativePowerOfLightlike);
}

TEST_CASE("pow_closed examples") {
  // N = 2, theta = pi/3: 8 (cos pi + eps sin pi) = -8.
  CHECK(max_diff(pow_closed(SplitQuaternion(1, 2, 1, 0), 3), SplitQuaternion(-8, 0, 0, 0)) <= 1e-14);
  // N^2 = 3, cosh 2t = 5/3, sinh 2t = 4/3.
  CHECK(oracle::power({1, 0, 2, 0}, 2) == oracle::Q{5, 0, 4, 0});
  CHECK(max_diff(pow_closed(SplitQuaternion(1, 0, 2, 0), 2), SplitQuaternion(5, 0, 4, 0)) <= 1e-14);
  // Lightlike: (2 q0)^4 q.
  CHECK(oracle::power({1, 0, 1, 0}, 5) == oracle::Q{16, 0, 16, 0});
  CHECK(pow_closed(SplitQuaternion(1, 0, 1, 0), 5) == SplitQuaternion(16, 0, 16, 0));
  CHECK(pow_closed(SplitQuaternion(0.3, -1, 2, 5), 0) == SplitQuaternion::one());
  // Pure null quaternions are nilpotent.
  CHECK(pow_closed(SplitQuaternion(0, 1, 1, 0), 1) == SplitQuaternion(0, 1, 1, 0));
  CHECK(pow_closed(SplitQuaternion(0, 1, 1, 0), 2) == SplitQuaternion());
}

TEST_CASE("pow_closed with negative exponents") {
  const SplitQuaternion q(2, 0, 1, 0);
  const SplitQuaternion inv = inverse(q);
  CHECK(max_diff(pow_closed(q, -3), pow_naive(inv, 3)) <= 1e-14);
  CHECK(max_diff(mul(pow_closed(q, -2), pow_closed(q, 2)), SplitQuaternion::one()) <= 1e-13);
  CHECK(code_of([] { pow_closed(SplitQuaternion(1, 0, 1, 0), -1); }) == ErrorCode::NegativePowerOfLightlike);
  CHECK(code_of([] { pow_closed(SplitQuaternion(2), std::numeric_limits<std::int64_t>::min()); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("pow_closed reports overflow") {
  CHECK(code_of([] { pow_closed(SplitQuaternion(2), 2000); }) == ErrorCode::OverflowedToInfinity);
  CHECK(code_of([] { left_pow_closed(SplitQuaternion(2, 0, 1, 0), 5000); }) == ErrorCode::OverflowedToInfinity);
  CHECK(code_of([] { mat_pow_naive(left_matrix(SplitQuaternion(2)), 2000); }) == ErrorCode::OverflowedToInfinity);
  // Unit timelike-vector quaternions stay bounded for any n.
  const SplitQuaternion unit = normalize(SplitQuaternion(1, 2, 1, 0));
  CHECK(left_pow_closed(unit, 1000000).max_abs() < 10.0);
}

TEST_CASE("De Moivre: closed vs naive across causal classes") {
  sampling::Sampler s(32);
  for (int t = 0; t < 100; ++t) {
    for (const SplitQuaternion& q :
         {s.timelike_spacelike_vec(), s.timelike_timelike_vec(), s.spacelike(), s.lightlike()}) {
      for (std::int64_t n = 0; n <= 20; ++n) {
        const double scale = scale_of(q, n);
        const SplitQuaternion naive = pow_naive(q, n);
        CHECK(max_diff(pow_closed(q, n), naive) <= 1e-9 * scale);
        CHECK(mat_max_abs_diff(left_pow_closed(q, n), mat_pow_naive(left_matrix(q), n)) <= 1e-9 * scale);
        CHECK(mat_max_abs_diff(right_pow_closed(q, n), mat_pow_naive(right_matrix(q), n)) <= 1e-9 * scale);
        CHECK(mat_max_abs_diff(left_pow_closed(q, n), left_matrix(naive)) <= 1e-9 * scale);
        CHECK(mat_max_abs_diff(right_pow_closed(q, n), right_matrix(naive)) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("spacelike parity") {
  sampling::Sampler s(33);
  for (int t = 0; t < 100; ++t) {
    const SplitQuaternion q = s.spacelike();
    for (std::int64_t n = 1; n <= 20; ++n) {
      const CausalCharacter want = n % 2 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
      CHECK(classify(pow_closed(q, n)) == want);
    }
  }
}

TEST_CASE("matrix power examples") {
  CHECK(mat_max_abs_diff(left_pow_closed(SplitQuaternion(1, 2, 1, 0), 3), -8.0 * Mat4::identity()) <= 1e-13);
  const SplitQuaternion q(0.7, -0.2, 0.4, 0.1);
  CHECK(mat_max_abs_diff(left_pow_closed(q, 1), left_matrix(q)) <= 1e-15);
  CHECK(mat_max_abs_diff(right_pow_closed(q, 1), right_matrix(q)) <= 1e-15);
  CHECK(mat_max_abs_diff(left_pow_closed(SplitQuaternion(1, 0, 2, 0), 2), left_matrix(SplitQuaternion(5, 0, 4, 0))) <=
        1e-14);
  CHECK(left_pow_closed(q, 0) == Mat4::identity());
  CHECK_THROWS_AS(left_pow_closed(q, -1), Error);

  CHECK(mat_pow_naive(left_matrix(q), 0) == Mat4::identity());
  CHECK(mat_pow_naive(left_matrix(SplitQuaternion::unit_i()), 2) == -1.0 * Mat4::identity());
  CHECK(mat_pow_naive(left_matrix(SplitQuaternion(1, 0, 1, 0)), 3) == left_matrix(SplitQuaternion(4, 0, 4, 0)));
}

TEST_CASE("induction identities behind the matrix powers") {
  for (int step = -30; step <= 30; ++step) {
    const double t = step / 10.0;
    for (int n = 0; n <= 20; ++n) {
      const double hyp = std::cosh(t) * std::cosh(n * t) + std::sinh(t) * std::sinh(n * t);
      CHECK(std::abs(hyp - std::cosh((n + 1) * t)) <= 1e-12 * std::cosh((n + 1) * t));
      const double circ = std::cos(t) * std::cos(n * t) - std::sin(t) * std::sin(n * t);
      CHECK(std::abs(circ - std::cos((n + 1) * t)) <= 1e-12 * (n + 2));
    }
  }
}

TEST_CASE("exp_left_closed examples") {
  CHECK(mat_max_abs_diff(exp_left_closed(Vector3M(1, 0, 0), std::numbers::pi), -1.0 * Mat4::identity()) <= 1e-15);
  CHECK(exp_left_closed(Vector3M(0, 1, 0), 0.0) == Mat4::identity());

  const double t = std::log(std::sqrt(3.0));
  const double r3 = std::sqrt(3.0);
  const Mat4 want = (2 / r3) * Mat4::identity() + (1 / r3) * left_matrix(Vector3M(0, 1, 0));
  CHECK(mat_max_abs_diff(exp_left_closed(Vector3M(0, 1, 0), t), want) <= 1e-15);
  CHECK(mat_max_abs_diff(exp_left_closed(Vector3M(0, 1, 0), t), mat_exp_series(t * left_matrix(Vector3M(0, 1, 0)))) <=
        1e-14);

  const Mat4 null_want = Mat4::identity() + 2.0 * left_matrix(Vector3M(1, 1, 0));
  CHECK(exp_left_closed(Vector3M(1, 1, 0), 2.0) == null_want);
  CHECK(mat_exp_series(2.0 * left_matrix(Vector3M(1, 1, 0))) == null_want);

  CHECK(code_of([] { exp_left_closed(Vector3M(2, 0, 0), 1.0); }) == ErrorCode::NonUnitAxis);
  CHECK(code_of([] { exp_right_closed(Vector3M(0, 0.5, 0), 1.0); }) == ErrorCode::NonUnitAxis);
}

TEST_CASE("Euler closed forms match the series on the theta grid") {
  sampling::Sampler s(34);
  std::vector<Vector3M> axes = {Vector3M(1, 1, 0)};
  for (int k = 0; k < 5; ++k) {
    axes.push_back(s.unit_timelike());
    axes.push_back(s.unit_spacelike());
    axes.push_back(s.null_vector());
  }
  for (const Vector3M& eps : axes) {
    for (int step = -30; step <= 30; ++step) {
      const double t = step / 10.0;
      CHECK(mat_max_abs_diff(exp_left_closed(eps, t), mat_exp_series(t * left_matrix(eps))) <= 1e-10);
      CHECK(mat_max_abs_diff(exp_right_closed(eps, t), mat_exp_series(t * right_matrix(eps))) <= 1e-10);
    }
  }
}

TEST_CASE("exponentials compose along one axis") {
  sampling::Sampler s(35);
  for (int k = 0; k < 30; ++k) {
    const Vector3M eps = k % 3 == 0 ? s.unit_timelike() : k % 3 == 1 ? s.unit_spacelike() : s.null_vector();
    const double a = s.uniform(-1.5, 1.5), b = s.uniform(-1.5, 1.5);
    const Mat4 ab = exp_left_closed(eps, a + b);
    CHECK(mat_max_abs_diff(exp_left_closed(eps, a) * exp_left_closed(eps, b), ab) <= 1e-11 * std::max(1.0, ab.max_abs()));
  }
}

TEST_CASE("mat_exp_series") {
  CHECK(mat_exp_series(Mat4::zero()) == Mat4::identity());
  CHECK(mat_max_abs_diff(mat_exp_series(std::numbers::pi * left_matrix(SplitQuaternion::unit_i()), {1e-14, 200}),
                         -1.0 * Mat4::identity()) <= 1e-12);
  CHECK(mat_exp_series(left_matrix(Vector3M(1, 1, 0))) ==
        Mat4::identity() + left_matrix(Vector3M(1, 1, 0)));
  CHECK(code_of([] { mat_exp_series(Mat4::identity(), {1e-14, 3}); }) == ErrorCode::SeriesDidNotConverge);
  CHECK(code_of([] { mat_exp_series(Mat4::identity(), {0.0, 10}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { mat_exp_series(Mat4::identity(), {1e-14, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("exp_quaternion") {
  CHECK(exp_quaternion(SplitQuaternion()) == SplitQuaternion::one());
  CHECK(max_diff(exp_quaternion(SplitQuaternion(0, std::numbers::pi / 2, 0, 0)), SplitQuaternion::unit_i()) <= 1e-15);

  const double t = std::log(std::sqrt(3.0));
  const double r3 = std::sqrt(3.0);
  const SplitQuaternion want = std::exp(1.0) * SplitQuaternion(2 / r3, 0, 1 / r3, 0);
  CHECK(max_diff(exp_quaternion(SplitQuaternion(1, 0, t, 0)), want) <= 1e-14);

  // Pure unit axes follow the Euler closed forms.
  sampling::Sampler s(36);
  for (int k = 0; k < 20; ++k) {
    const double th = s.uniform(-2, 2);
    const Vector3M tl = s.unit_timelike(0.5);
    const Vector3M sl = s.unit_spacelike(0.5);
    const SplitQuaternion et = exp_quaternion(SplitQuaternion(0.0, th * tl));
    const SplitQuaternion es = exp_quaternion(SplitQuaternion(0.0, th * sl));
    CHECK(max_diff(et, SplitQuaternion(std::cos(th), std::sin(th) * tl)) <= 1e-13);
    CHECK(max_diff(es, SplitQuaternion(std::cosh(th), std::sinh(th) * sl)) <= 1e-13);
  }
}
