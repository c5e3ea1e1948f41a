#include "coquat/demoivre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coquat/error.hpp"

namespace coquat {
namespace {

/// q^n = scalar + along * axis, or q^n = factor * q for lightlike q.
struct PowerCoeffs {
  bool lightlike = false;
  double factor = 1.0;
  double scalar = 1.0;
  double along = 0.0;
  Vector3M axis{0.0, 0.0, 1.0};
};

void require_nonnegative(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "exponent must be >= 0");
}

PowerCoeffs power_coeffs(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg) {
  PowerCoeffs out;
  if (n == 0) return out;

  if (classify(q, cfg) == CausalCharacter::Lightlike) {
    // q^2 = 2 q0 q - I_q with I_q = 0.
    out.lightlike = true;
    out.factor = std::pow(2.0 * q.scalar(), static_cast<double>(n - 1));
    return out;
  }

  const PolarForm f = decompose(q, cfg);
  const double nd = static_cast<double>(n);
  const double scale = std::exp(nd * std::log(f.n));
  const double angle = nd * f.theta;
  const bool odd = (n % 2) != 0;
  out.axis = f.eps;

  switch (f.kind) {
    case PolarKind::TimelikeSpacelikeVec: {
      const double sgn = (odd && f.sign < 0) ? -1.0 : 1.0;
      out.scalar = sgn * scale * std::cosh(angle);
      out.along = sgn * scale * std::sinh(angle);
      break;
    }
    case PolarKind::TimelikeTimelikeVec:
      out.scalar = scale * std::cos(angle);
      out.along = scale * std::sin(angle);
      break;
    case PolarKind::Spacelike:
      if (odd) {
        out.scalar = scale * std::sinh(angle);
        out.along = scale * std::cosh(angle);
      } else {
        out.scalar = scale * std::cosh(angle);
        out.along = scale * std::sinh(angle);
      }
      break;
  }
  return out;
}

/// c I4 + s B, where B has a zero diagonal.
Mat4 diagonal_plus(double c, double s, const Mat4& b) noexcept {
  std::array<double, 16> e;
  for (std::size_t k = 0; k < 16; ++k) e[k] = s * b.data()[k];
  for (std::size_t d = 0; d < 4; ++d) e[5 * d] += c;
  return unchecked::from_entries(e);
}

Mat4 scaled(double s, const Mat4& b) noexcept {
  std::array<double, 16> e;
  for (std::size_t k = 0; k < 16; ++k) e[k] = s * b.data()[k];
  return unchecked::from_entries(e);
}

template <typename Rep>
Mat4 pow_closed_matrix(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg, Rep rep) {
  require_nonnegative(n);
  if (n == 0) return Mat4::identity();
  const PowerCoeffs c = power_coeffs(q, n, cfg);
  if (c.lightlike) return scaled(c.factor, rep(q));
  return diagonal_plus(c.scalar, c.along, rep(c.axis));
}

Mat4 finite_or_throw(const Mat4& m, const char* what) {
  if (!unchecked::all_finite(m)) throw Error(ErrorCode::OverflowedToInfinity, what);
  return m;
}

template <typename Rep>
Mat4 exp_closed(const Vector3M& eps, double theta, Rep rep) {
  if (!std::isfinite(theta)) throw Error(ErrorCode::NonFinite, "exponential angle is not finite");
  const double g = lorentz_inner(eps, eps);
  const double tol = kAxisTol * std::max(1.0, eps.euclidean_sq());
  Mat4 out;
  if (std::abs(g + 1.0) <= tol) {
    out = diagonal_plus(std::cos(theta), std::sin(theta), rep(eps));
  } else if (std::abs(g - 1.0) <= tol) {
    out = diagonal_plus(std::cosh(theta), std::sinh(theta), rep(eps));
  } else if (std::abs(g) <= tol) {
    out = diagonal_plus(1.0, theta, rep(eps));
  } else {
    throw Error(ErrorCode::NonUnitAxis, "exponential axis must satisfy <eps,eps> in {-1, 0, +1}");
  }
  return finite_or_throw(out, "matrix exponential overflowed");
}

}  // namespace

SplitQuaternion pow_naive(const SplitQuaternion& q, std::int64_t n) {
  require_nonnegative(n);
  SplitQuaternion acc = SplitQuaternion::one();
  for (std::int64_t k = 0; k < n; ++k) acc = mul(q, acc);
  return acc;
}

SplitQuaternion pow_by_squaring(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg) {
  if (n < 0) {
    if (classify(q, cfg) == CausalCharacter::Lightlike) {
      throw Error(ErrorCode::NegativePowerOfLightlike, "lightlike split quaternion has no negative powers");
    }
    if (n == std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::InvalidArgument, "exponent out of range");
    }
    return pow_by_squaring(inverse(q, cfg), -n, cfg);
  }
  SplitQuaternion acc = SplitQuaternion::one();
  SplitQuaternion base = q;
  // Powers of one element commute, so the multiplication order is free.
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

SplitQuaternion pow_closed(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg) {
  if (n < 0) {
    if (classify(q, cfg) == CausalCharacter::Lightlike) {
      throw Error(ErrorCode::NegativePowerOfLightlike, "lightlike split quaternion has no negative powers");
    }
    if (n == std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::InvalidArgument, "exponent out of range");
    }
    return pow_closed(inverse(q, cfg), -n, cfg);
  }
  if (n == 0) return SplitQuaternion::one();

  const PowerCoeffs c = power_coeffs(q, n, cfg);
  const double parts[4] = {
      c.lightlike ? c.factor * q.q0() : c.scalar,
      c.lightlike ? c.factor * q.q1() : c.along * c.axis.u1(),
      c.lightlike ? c.factor * q.q2() : c.along * c.axis.u2(),
      c.lightlike ? c.factor * q.q3() : c.along * c.axis.u3(),
  };
  for (double x : parts) {
    if (!std::isfinite(x)) throw Error(ErrorCode::OverflowedToInfinity, "closed-form power overflowed");
  }
  return SplitQuaternion(parts[0], parts[1], parts[2], parts[3]);
}

Mat4 left_pow_closed(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg) {
  return finite_or_throw(unchecked::left_pow_closed(q, n, cfg), "closed-form matrix power overflowed");
}

Mat4 right_pow_closed(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg) {
  const auto rep = [](const auto& x) { return right_matrix(x); };
  return finite_or_throw(pow_closed_matrix(q, n, cfg, rep), "closed-form matrix power overflowed");
}

Mat4 mat_pow_naive(const Mat4& m, std::int64_t n) {
  require_nonnegative(n);
  return finite_or_throw(unchecked::mat_pow_naive(m, n), "matrix power overflowed");
}

Mat4 exp_left_closed(const Vector3M& eps, double theta) {
  return exp_closed(eps, theta, [](const Vector3M& v) { return left_matrix(v); });
}

Mat4 exp_right_closed(const Vector3M& eps, double theta) {
  return exp_closed(eps, theta, [](const Vector3M& v) { return right_matrix(v); });
}

Mat4 mat_exp_series(const Mat4& m, const SeriesOptions& opts) {
  if (!std::isfinite(opts.tol) || opts.tol <= 0.0 || opts.max_terms < 1) {
    throw Error(ErrorCode::InvalidArgument, "series needs tol > 0 and max_terms >= 1");
  }
  std::array<double, 16> sum = Mat4::identity().data();
  Mat4 term = Mat4::identity();
  for (int k = 1; k <= opts.max_terms; ++k) {
    // term <- term * M / k keeps the factorial out of the arithmetic.
    std::array<double, 16> next = unchecked::mul(term, m).data();
    double term_max = 0.0;
    double sum_max = 0.0;
    for (std::size_t e = 0; e < 16; ++e) {
      next[e] /= k;
      sum[e] += next[e];
      term_max = std::max(term_max, std::abs(next[e]));
      sum_max = std::max(sum_max, std::abs(sum[e]));
    }
    term = unchecked::from_entries(next);
    if (!std::isfinite(term_max) || !std::isfinite(sum_max)) {
      throw Error(ErrorCode::OverflowedToInfinity, "exponential series overflowed");
    }
    if (term_max <= opts.tol * std::max(1.0, sum_max)) return unchecked::from_entries(sum);
  }
  throw Error(ErrorCode::SeriesDidNotConverge, "exponential series did not converge within max_terms");
}

SplitQuaternion exp_quaternion(const SplitQuaternion& q, const SeriesOptions& opts) {
  const Mat4 e = mat_exp_series(left_matrix(q), opts);
  return quaternion_from_left(e, kDefaultRepresentationTol * std::max(1.0, e.max_abs()));
}

namespace unchecked {

Mat4 left_pow_closed(const SplitQuaternion& q, std::int64_t n, const ClassifyConfig& cfg) {
  const auto rep = [](const auto& x) { return left_matrix(x); };
  return pow_closed_matrix(q, n, cfg, rep);
}

Mat4 mat_pow_naive(const Mat4& m, std::int64_t n) noexcept {
  Mat4 acc = Mat4::identity();
  for (std::int64_t k = 0; k < n; ++k) acc = mul(m, acc);
  return acc;
}

}  // namespace unchecked

}  // namespace coquat
