#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "coquat/split_quaternion.hpp"

namespace coquat::sampling {

/// Seeded draws of split quaternions and Minkowski axes for property checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int sign() { return uniform(0.0, 1.0) < 0.5 ? -1 : 1; }

  /// Components uniform in [-r, r].
  SplitQuaternion box(double r = 2.0) {
    return SplitQuaternion(uniform(-r, r), uniform(-r, r), uniform(-r, r), uniform(-r, r));
  }
  Vector3M box_vector(double r = 2.0) { return Vector3M(uniform(-r, r), uniform(-r, r), uniform(-r, r)); }

  /// <e,e> = +1: (sinh a, cosh a cos phi, cosh a sin phi).
  Vector3M unit_spacelike(double a_max = 1.0) {
    const double a = uniform(-a_max, a_max);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    return Vector3M(std::sinh(a), std::cosh(a) * std::cos(phi), std::cosh(a) * std::sin(phi));
  }

  /// <e,e> = -1: (+-cosh a, sinh a cos phi, sinh a sin phi).
  Vector3M unit_timelike(double a_max = 1.0) {
    const double a = uniform(-a_max, a_max);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    return Vector3M(sign() * std::cosh(a), std::sinh(a) * std::cos(phi), std::sinh(a) * std::sin(phi));
  }

  /// <e,e> = 0: s (1, cos phi, sin phi).
  Vector3M null_vector(double s_lo = 0.5, double s_hi = 1.5) {
    const double s = sign() * uniform(s_lo, s_hi);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    return Vector3M(s, s * std::cos(phi), s * std::sin(phi));
  }

  /// sign N (cosh t + eps sinh t), eps unit spacelike, t > 0.
  SplitQuaternion timelike_spacelike_vec() {
    const double n = uniform(0.8, 1.25);
    const double t = uniform(0.05, 0.6);
    const Vector3M e = unit_spacelike();
    const double s = sign();
    return SplitQuaternion(s * n * std::cosh(t), s * n * std::sinh(t) * e.u1(), s * n * std::sinh(t) * e.u2(),
                           s * n * std::sinh(t) * e.u3());
  }

  /// N (cos t + eps sin t), eps unit timelike, t in (0, pi).
  SplitQuaternion timelike_timelike_vec() {
    const double n = uniform(0.8, 1.25);
    const double t = uniform(0.05, std::numbers::pi - 0.05);
    const Vector3M e = unit_timelike();
    return SplitQuaternion(n * std::cos(t), n * std::sin(t) * e.u1(), n * std::sin(t) * e.u2(),
                           n * std::sin(t) * e.u3());
  }

  /// N (sinh t + eps cosh t), eps unit spacelike.
  SplitQuaternion spacelike() {
    const double n = uniform(0.8, 1.25);
    const double t = uniform(-0.6, 0.6);
    const Vector3M e = unit_spacelike();
    return SplitQuaternion(n * std::sinh(t), n * std::cosh(t) * e.u1(), n * std::cosh(t) * e.u2(),
                           n * std::cosh(t) * e.u3());
  }

  /// q0 + V with <V,V> = q0^2; every fourth draw is a pure null vector.
  SplitQuaternion lightlike() {
    if (++lightlike_draws_ % 4 == 0) return SplitQuaternion(0.0, null_vector());
    const double q0 = sign() * uniform(0.3, 1.25);
    const Vector3M e = unit_spacelike(0.5);
    return SplitQuaternion(q0, q0 * e.u1(), q0 * e.u2(), q0 * e.u3());
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int lightlike_draws_ = 0;
};

}  // namespace coquat::sampling
