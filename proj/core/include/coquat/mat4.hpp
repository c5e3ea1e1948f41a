#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "coquat/split_quaternion.hpp"

namespace coquat {

/// Coordinates of a split quaternion in the basis (1, i, j, k).
struct QuatCoords {
  std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

  double operator[](std::size_t idx) const noexcept { return v[idx]; }
  double& operator[](std::size_t idx) noexcept { return v[idx]; }
  friend bool operator==(const QuatCoords&, const QuatCoords&) = default;
};

QuatCoords coords(const SplitQuaternion& q) noexcept;
/// Throws Error(NonFinite) if any coordinate is not finite.
SplitQuaternion from_coords(const QuatCoords& c);

/// Dense 4x4 real matrix, row-major, indexed (row, col).
///
/// Entries are finite at every public boundary. Arithmetic that overflows
/// throws Error(OverflowedToInfinity).
class Mat4 {
 public:
  using Rows = std::array<std::array<double, 4>, 4>;

  /// Zero matrix.
  constexpr Mat4() = default;
  /// Throws Error(NonFinite) on NaN or infinite entries.
  explicit Mat4(const Rows& rows);

  static Mat4 identity();
  static Mat4 zero() { return Mat4(); }

  double operator()(std::size_t row, std::size_t col) const noexcept { return a_[4 * row + col]; }
  const std::array<double, 16>& data() const noexcept { return a_; }
  Rows rows() const noexcept;
  double max_abs() const noexcept;

  friend bool operator==(const Mat4&, const Mat4&) = default;

 private:
  friend struct MatAccess;
  std::array<double, 16> a_{};
};

Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a);
Mat4 operator*(double r, const Mat4& a);
Mat4 operator*(const Mat4& a, const Mat4& b);

inline Mat4 mat_mul(const Mat4& a, const Mat4& b) { return a * b; }
inline Mat4 mat_add(const Mat4& a, const Mat4& b) { return a + b; }
inline Mat4 mat_scale(double r, const Mat4& a) { return r * a; }
inline Mat4 mat_identity() { return Mat4::identity(); }
double mat_max_abs_diff(const Mat4& a, const Mat4& b) noexcept;

/// Matrix-vector product M v.
QuatCoords apply(const Mat4& m, const QuatCoords& v);

/// L_q, the matrix of p -> q p in the basis (1, i, j, k).
///
///   [ q0 -q1  q2  q3 ]
///   [ q1  q0  q3 -q2 ]
///   [ q2  q3  q0 -q1 ]
///   [ q3 -q2  q1  q0 ]
Mat4 left_matrix(const SplitQuaternion& q) noexcept;

/// R_q, the matrix of p -> p q in the basis (1, i, j, k).
///
///   [ q0 -q1  q2  q3 ]
///   [ q1  q0 -q3  q2 ]
///   [ q2 -q3  q0  q1 ]
///   [ q3  q2 -q1  q0 ]
Mat4 right_matrix(const SplitQuaternion& q) noexcept;

/// L and R of a pure quaternion given by its vector part.
Mat4 left_matrix(const Vector3M& v) noexcept;
Mat4 right_matrix(const Vector3M& v) noexcept;

inline constexpr double kDefaultRepresentationTol = 1e-9;

/// Reads q from column 0 and checks that M equals L_q within tol (max-abs).
/// Throws Error(NotALeftRepresentation) otherwise.
SplitQuaternion quaternion_from_left(const Mat4& m, double tol = kDefaultRepresentationTol);

/// "[[a,b,c,d],[...],[...],[...]]" with shortest round-trip numbers.
std::string format(const Mat4& m);
std::ostream& operator<<(std::ostream& os, const Mat4& m);

namespace unchecked {

/// Wraps row-major entries without the finiteness check.
Mat4 from_entries(const std::array<double, 16>& entries) noexcept;
/// Product without the finiteness check; entries may overflow to Inf/NaN.
Mat4 mul(const Mat4& a, const Mat4& b) noexcept;
bool all_finite(const Mat4& m) noexcept;

}  // namespace unchecked

}  // namespace coquat
