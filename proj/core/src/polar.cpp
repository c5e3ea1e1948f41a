#include "coquat/polar.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "coquat/error.hpp"

namespace coquat {

std::string_view to_string(PolarKind kind) noexcept {
  switch (kind) {
    case PolarKind::TimelikeSpacelikeVec: return "timelike_spacelike_vec";
    case PolarKind::TimelikeTimelikeVec: return "timelike_timelike_vec";
    case PolarKind::Spacelike: return "spacelike";
  }
  return "?";
}

PolarForm decompose(const SplitQuaternion& q, const ClassifyConfig& cfg) {
  const CausalCharacter character = classify(q, cfg);
  if (character == CausalCharacter::Lightlike) {
    throw Error(ErrorCode::LightlikeNoPolarForm, "lightlike split quaternion has no polar form");
  }

  const double q0 = q.scalar();
  const Vector3M v = q.vector();
  const double g = lorentz_inner(v, v);
  PolarForm f;

  if (character == CausalCharacter::Spacelike) {
    // <V,V> = q0^2 - I_q > 0, so the vector part is spacelike here.
    const double s = std::sqrt(g);
    f.kind = PolarKind::Spacelike;
    f.n = std::sqrt(g - q0 * q0);
    f.theta = std::asinh(q0 / f.n);
    f.eps = (1.0 / s) * v;
    return f;
  }

  if (v.is_zero()) {
    f.kind = PolarKind::TimelikeSpacelikeVec;
    f.n = std::abs(q0);
    f.theta = 0.0;
    f.eps = Vector3M(0.0, 0.0, 1.0);
    f.sign = q0 < 0.0 ? -1 : 1;
    return f;
  }

  switch (classify_vector(v, cfg)) {
    case CausalCharacter::Spacelike: {
      const double s = std::sqrt(g);
      f.kind = PolarKind::TimelikeSpacelikeVec;
      f.sign = q0 < 0.0 ? -1 : 1;
      f.n = std::sqrt(q0 * q0 - g);
      f.theta = std::asinh(s / f.n);
      f.eps = (f.sign / s) * v;
      return f;
    }
    case CausalCharacter::Timelike: {
      const double s = std::sqrt(-g);
      f.kind = PolarKind::TimelikeTimelikeVec;
      f.n = std::sqrt(q0 * q0 - g);
      f.theta = std::atan2(s, q0);
      f.eps = (1.0 / s) * v;
      return f;
    }
    case CausalCharacter::Lightlike:
      break;
  }
  throw Error(ErrorCode::NullVectorPart, "timelike split quaternion with null vector part has no polar form");
}

SplitQuaternion reconstruct(const PolarForm& f) {
  if (!std::isfinite(f.n) || f.n < 0.0 || !std::isfinite(f.theta)) {
    throw Error(ErrorCode::InvalidPolarForm, "polar form needs finite n >= 0 and finite theta");
  }
  if (f.sign != 1 && f.sign != -1) throw Error(ErrorCode::InvalidPolarForm, "polar sign must be +1 or -1");
  if (f.sign == -1 && f.kind != PolarKind::TimelikeSpacelikeVec) {
    throw Error(ErrorCode::InvalidPolarForm, "only the cosh form carries a sign");
  }

  const double g = lorentz_inner(f.eps, f.eps);
  const double want = f.kind == PolarKind::TimelikeTimelikeVec ? -1.0 : 1.0;
  if (std::abs(g - want) > kAxisTol * std::max(1.0, f.eps.euclidean_sq())) {
    throw Error(ErrorCode::InvalidAxis, "polar axis is not a unit vector of the required character");
  }

  double scalar = 0.0;
  double along = 0.0;
  switch (f.kind) {
    case PolarKind::TimelikeSpacelikeVec:
      scalar = f.sign * f.n * std::cosh(f.theta);
      along = f.sign * f.n * std::sinh(f.theta);
      break;
    case PolarKind::TimelikeTimelikeVec:
      scalar = f.n * std::cos(f.theta);
      along = f.n * std::sin(f.theta);
      break;
    case PolarKind::Spacelike:
      scalar = f.n * std::sinh(f.theta);
      along = f.n * std::cosh(f.theta);
      break;
  }
  if (!std::isfinite(scalar) || !std::isfinite(along)) {
    throw Error(ErrorCode::OverflowedToInfinity, "polar reconstruction overflowed");
  }
  return SplitQuaternion(scalar, along * f.eps.u1(), along * f.eps.u2(), along * f.eps.u3());
}

std::ostream& operator<<(std::ostream& os, const PolarForm& f) {
  return os << "polar{kind=" << to_string(f.kind) << ", n=" << format_number(f.n)
            << ", theta=" << format_number(f.theta) << ", eps=" << f.eps << ", sign=" << f.sign << '}';
}

}  // namespace coquat
