#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "coquat/split_quaternion.hpp"

namespace coquat {

enum class PolarKind {
  /// Timelike q, spacelike vector part: q = sign * n (cosh t + eps sinh t).
  TimelikeSpacelikeVec,
  /// Timelike q, timelike vector part: q = n (cos t + eps sin t).
  TimelikeTimelikeVec,
  /// Spacelike q: q = n (sinh t + eps cosh t).
  Spacelike,
};

std::string_view to_string(PolarKind kind) noexcept;

/// Polar decomposition of a non-lightlike split quaternion.
///
/// eps is a unit axis in Minkowski 3-space: <eps,eps> = +1 for the two
/// hyperbolic kinds and -1 for the circular kind. theta is >= 0 for
/// TimelikeSpacelikeVec, lies in [0, pi] for TimelikeTimelikeVec, and carries
/// the sign of q0 for Spacelike. sign is -1 only for TimelikeSpacelikeVec
/// with q0 < 0.
struct PolarForm {
  PolarKind kind = PolarKind::TimelikeSpacelikeVec;
  double n = 1.0;
  double theta = 0.0;
  Vector3M eps{0.0, 0.0, 1.0};
  int sign = 1;
};

/// Decomposes q according to its causal character and that of its vector part.
///
/// A timelike scalar (zero vector part) decomposes as TimelikeSpacelikeVec with
/// theta = 0 and eps = (0,0,1).
///
/// Throws Error(LightlikeNoPolarForm) for lightlike q and Error(NullVectorPart)
/// for timelike q whose nonzero vector part is null.
PolarForm decompose(const SplitQuaternion& q, const ClassifyConfig& cfg = {});

/// Inverse of decompose(). Throws Error(InvalidAxis) when eps misses its unit
/// condition by more than 1e-9 (scaled by max(1, |eps|^2)), and
/// Error(InvalidPolarForm) for a negative/non-finite n or a bad sign.
SplitQuaternion reconstruct(const PolarForm& f);

inline constexpr double kAxisTol = 1e-9;

std::ostream& operator<<(std::ostream& os, const PolarForm& f);

}  // namespace coquat
