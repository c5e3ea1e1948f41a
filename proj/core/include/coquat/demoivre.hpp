#pragma once

#include <cstdint>

#include "coquat/mat4.hpp"
#include "coquat/polar.hpp"
#include "coquat/split_quaternion.hpp"

namespace coquat {

// ---- integer powers ---------------------------------------------------------

/// q^n by repeated multiplication. Ground truth for the closed forms.
SplitQuaternion pow_naive(const SplitQuaternion& q, std::int64_t n);

/// q^n by square-and-multiply; exact whenever the intermediate products are.
/// Negative n routes through inverse(q); lightlike q then throws
/// Error(NegativePowerOfLightlike).
SplitQuaternion pow_by_squaring(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg = {});

/// q^n in closed form from the polar decomposition:
///
///   cosh form:   sign^n N^n (cosh nt + eps sinh nt)
///   cos form:    N^n (cos nt + eps sin nt)
///   spacelike:   N^n (sinh nt + eps cosh nt)  for odd n
///                N^n (cosh nt + eps sinh nt)  for even n
///
/// Lightlike q (extension): q^2 = 2 q0 q, hence q^n = (2 q0)^(n-1) q.
/// Negative n routes through inverse(q).
///
/// Throws Error(NegativePowerOfLightlike), Error(NullVectorPart) and
/// Error(OverflowedToInfinity) when the result leaves the doubles.
SplitQuaternion pow_closed(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg = {});

/// L_q^n and R_q^n as c I4 + s L_eps (resp. R_eps), with no matrix product.
/// Lightlike q (extension) yields (2 q0)^(n-1) L_q. Requires n >= 0.
Mat4 left_pow_closed(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg = {});
Mat4 right_pow_closed(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg = {});

/// M^n by repeated multiplication. Requires n >= 0.
Mat4 mat_pow_naive(const Mat4& m, std::int64_t n);

// ---- exponentials -----------------------------------------------------------

/// exp(theta L_eps) for a pure axis eps:
///   <eps,eps> = -1:  cos t I4 + sin t L_eps
///   <eps,eps> = +1:  cosh t I4 + sinh t L_eps
///   <eps,eps> =  0:  I4 + t L_eps   (extension: L_eps^2 = 0)
/// Throws Error(NonUnitAxis) if <eps,eps> is none of these within 1e-9.
Mat4 exp_left_closed(const Vector3M& eps, double theta);
Mat4 exp_right_closed(const Vector3M& eps, double theta);

struct SeriesOptions {
  double tol = 1e-14;
  int max_terms = 200;
};

/// Taylor series sum_k M^k / k!, stopped once the next term's max-abs is below
/// tol * max(1, max-abs of the partial sum). Throws Error(SeriesDidNotConverge)
/// when max_terms terms are not enough.
Mat4 mat_exp_series(const Mat4& m, const SeriesOptions& opts = {});

/// e^q, evaluated as the series of L_q read back through quaternion_from_left.
SplitQuaternion exp_quaternion(const SplitQuaternion& q, const SeriesOptions& opts = {});

namespace unchecked {

/// Same as the checked versions but never throw on overflow; the result may
/// hold Inf/NaN. q must still be decomposable (or lightlike).
Mat4 left_pow_closed(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg = {});
Mat4 mat_pow_naive(const Mat4& m, std::int64_t n) noexcept;

}  // namespace unchecked

}  // namespace coquat
