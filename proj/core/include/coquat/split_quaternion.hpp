#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

namespace coquat {

/// Tolerance used to decide when a quadratic form counts as zero.
///
/// A value x of the form is treated as zero when |x| <= tau * max(1, s), where
/// s is the squared Euclidean magnitude of the argument.
struct ClassifyConfig {
  double tau = 1e-12;

  /// Throws Error(InvalidArgument) unless tau is finite and non-negative.
  void validate() const;
};

enum class CausalCharacter { Timelike, Spacelike, Lightlike };

std::string_view to_string(CausalCharacter c) noexcept;

/// A vector of Minkowski 3-space with signature (-,+,+).
///
/// The first coordinate is the timelike axis; it pairs with the quaternion
/// unit i, the other two with j and k.
class Vector3M {
 public:
  constexpr Vector3M() = default;
  /// Throws Error(NonFinite) on NaN or infinite input.
  Vector3M(double u1, double u2, double u3);

  double u1() const noexcept { return u_[0]; }
  double u2() const noexcept { return u_[1]; }
  double u3() const noexcept { return u_[2]; }
  double operator[](std::size_t idx) const noexcept { return u_[idx]; }

  /// Squared Euclidean length, used to scale classification bands.
  double euclidean_sq() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const Vector3M&, const Vector3M&) = default;

 private:
  std::array<double, 3> u_{0.0, 0.0, 0.0};
};

Vector3M operator+(const Vector3M& u, const Vector3M& v);
Vector3M operator-(const Vector3M& u, const Vector3M& v);
Vector3M operator-(const Vector3M& u);
Vector3M operator*(double r, const Vector3M& u);

/// <u,v> = -u1 v1 + u2 v2 + u3 v3.
double lorentz_inner(const Vector3M& u, const Vector3M& v) noexcept;

/// Lorentzian vector product: the formal determinant with first row
/// (-e1, e2, e3). Antisymmetric and Lorentz-orthogonal to both arguments.
Vector3M lorentz_cross(const Vector3M& u, const Vector3M& v);

/// Spacelike iff <v,v> > 0, Timelike iff <v,v> < 0, outside the tau band.
CausalCharacter classify_vector(const Vector3M& v, const ClassifyConfig& cfg = {});

/// q = q0 + q1 i + q2 j + q3 k with i^2 = -1, j^2 = k^2 = 1, ijk = 1.
///
/// Immutable value type. All components are finite; every constructor and
/// every arithmetic operation rejects results that would contain NaN or Inf.
class SplitQuaternion {
 public:
  constexpr SplitQuaternion() = default;
  /// Throws Error(NonFinite) on NaN or infinite input.
  SplitQuaternion(double q0, double q1, double q2, double q3);
  /// Real scalar embedded as q0.
  explicit SplitQuaternion(double scalar) : SplitQuaternion(scalar, 0, 0, 0) {}
  SplitQuaternion(double scalar, const Vector3M& vec)
      : SplitQuaternion(scalar, vec.u1(), vec.u2(), vec.u3()) {}

  static SplitQuaternion one() { return SplitQuaternion(1.0, 0.0, 0.0, 0.0); }
  static SplitQuaternion unit_i() { return SplitQuaternion(0.0, 1.0, 0.0, 0.0); }
  static SplitQuaternion unit_j() { return SplitQuaternion(0.0, 0.0, 1.0, 0.0); }
  static SplitQuaternion unit_k() { return SplitQuaternion(0.0, 0.0, 0.0, 1.0); }
  /// Basis element by index in the order (1, i, j, k).
  static SplitQuaternion basis(std::size_t idx);

  double q0() const noexcept { return q_[0]; }
  double q1() const noexcept { return q_[1]; }
  double q2() const noexcept { return q_[2]; }
  double q3() const noexcept { return q_[3]; }
  double operator[](std::size_t idx) const noexcept { return q_[idx]; }
  const std::array<double, 4>& components() const noexcept { return q_; }

  double scalar() const noexcept { return q_[0]; }
  Vector3M vector() const { return Vector3M(q_[1], q_[2], q_[3]); }
  bool is_pure() const noexcept { return q_[0] == 0.0; }

  double euclidean_sq() const noexcept;
  /// Largest absolute component.
  double max_abs() const noexcept;

  friend bool operator==(const SplitQuaternion&, const SplitQuaternion&) = default;

 private:
  std::array<double, 4> q_{0.0, 0.0, 0.0, 0.0};
};

SplitQuaternion operator+(const SplitQuaternion& p, const SplitQuaternion& q);
SplitQuaternion operator-(const SplitQuaternion& p, const SplitQuaternion& q);
SplitQuaternion operator-(const SplitQuaternion& p);
SplitQuaternion operator*(double r, const SplitQuaternion& p);
SplitQuaternion operator*(const SplitQuaternion& p, double r);
SplitQuaternion operator/(const SplitQuaternion& p, double r);
/// Split-quaternion product. See mul().
SplitQuaternion operator*(const SplitQuaternion& p, const SplitQuaternion& q);

/// Product by expansion over the 16 basis products of the multiplication table.
/// Debug builds cross-check it against mul_lorentz().
SplitQuaternion mul(const SplitQuaternion& p, const SplitQuaternion& q);

/// Product through S_p S_q + <V_p,V_q> + S_p V_q + S_q V_p + V_p x V_q.
SplitQuaternion mul_lorentz(const SplitQuaternion& p, const SplitQuaternion& q);

SplitQuaternion conjugate(const SplitQuaternion& q);

/// I_q = q conj(q) = q0^2 + q1^2 - q2^2 - q3^2.
double iq_form(const SplitQuaternion& q) noexcept;

/// N_q = sqrt(|I_q|).
double norm(const SplitQuaternion& q) noexcept;

/// Timelike iff I_q > 0, Spacelike iff I_q < 0, Lightlike inside the tau band.
CausalCharacter classify(const SplitQuaternion& q, const ClassifyConfig& cfg = {});

/// q / N_q. Throws Error(LightlikeNormalization) for lightlike q.
SplitQuaternion normalize(const SplitQuaternion& q, const ClassifyConfig& cfg = {});

/// conj(q) / I_q. Throws Error(LightlikeInverse) for lightlike q.
SplitQuaternion inverse(const SplitQuaternion& q, const ClassifyConfig& cfg = {});

/// Shortest decimal that round-trips to the same double. Integral values
/// print without a fraction ("3", "-0.5", "1e+20").
std::string format_number(double x);

/// Text form "a+bi+cj+dk": zero terms elided, unit coefficients printed as the
/// bare unit ("i", "-j"), the zero quaternion printed as "0".
std::string format(const SplitQuaternion& q);

std::ostream& operator<<(std::ostream& os, const SplitQuaternion& q);
std::ostream& operator<<(std::ostream& os, const Vector3M& v);
std::ostream& operator<<(std::ostream& os, CausalCharacter c);

}  // namespace coquat
