#include "coquat/mat4.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "coquat/error.hpp"

namespace coquat {

struct MatAccess {
  static std::array<double, 16>& raw(Mat4& m) noexcept { return m.a_; }
};

namespace {

Mat4 build(const std::array<double, 16>& entries) noexcept {
  Mat4 m;
  MatAccess::raw(m) = entries;
  return m;
}

Mat4 checked(const Mat4& m) {
  if (!unchecked::all_finite(m)) {
    throw Error(ErrorCode::OverflowedToInfinity, "matrix arithmetic overflowed");
  }
  return m;
}

}  // namespace

QuatCoords coords(const SplitQuaternion& q) noexcept { return QuatCoords{q.components()}; }

SplitQuaternion from_coords(const QuatCoords& c) { return SplitQuaternion(c[0], c[1], c[2], c[3]); }

Mat4::Mat4(const Rows& rows) {
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (!std::isfinite(rows[r][c])) throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
      a_[4 * r + c] = rows[r][c];
    }
  }
}

Mat4 Mat4::identity() {
  Mat4 m;
  for (std::size_t d = 0; d < 4; ++d) m.a_[5 * d] = 1.0;
  return m;
}

Mat4::Rows Mat4::rows() const noexcept {
  Rows out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r][c] = a_[4 * r + c];
  return out;
}

double Mat4::max_abs() const noexcept {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  std::array<double, 16> r;
  for (std::size_t k = 0; k < 16; ++k) r[k] = a.data()[k] + b.data()[k];
  return checked(build(r));
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  std::array<double, 16> r;
  for (std::size_t k = 0; k < 16; ++k) r[k] = a.data()[k] - b.data()[k];
  return checked(build(r));
}

Mat4 operator-(const Mat4& a) {
  std::array<double, 16> r;
  for (std::size_t k = 0; k < 16; ++k) r[k] = -a.data()[k];
  return build(r);
}

Mat4 operator*(double s, const Mat4& a) {
  std::array<double, 16> r;
  for (std::size_t k = 0; k < 16; ++k) r[k] = s * a.data()[k];
  return checked(build(r));
}

Mat4 operator*(const Mat4& a, const Mat4& b) { return checked(unchecked::mul(a, b)); }

double mat_max_abs_diff(const Mat4& a, const Mat4& b) noexcept {
  double m = 0.0;
  for (std::size_t k = 0; k < 16; ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

QuatCoords apply(const Mat4& m, const QuatCoords& v) {
  QuatCoords out;
  for (std::size_t r = 0; r < 4; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < 4; ++c) s += m(r, c) * v[c];
    if (!std::isfinite(s)) throw Error(ErrorCode::OverflowedToInfinity, "matrix-vector product overflowed");
    out[r] = s;
  }
  return out;
}

Mat4 left_matrix(const SplitQuaternion& q) noexcept {
  const double a = q.q0(), b = q.q1(), c = q.q2(), d = q.q3();
  return build({a, -b, c, d,
                b, a, d, -c,
                c, d, a, -b,
                d, -c, b, a});
}

Mat4 right_matrix(const SplitQuaternion& q) noexcept {
  const double a = q.q0(), b = q.q1(), c = q.q2(), d = q.q3();
  return build({a, -b, c, d,
                b, a, -d, c,
                c, -d, a, b,
                d, c, -b, a});
}

Mat4 left_matrix(const Vector3M& v) noexcept { return left_matrix(SplitQuaternion(0.0, v)); }
Mat4 right_matrix(const Vector3M& v) noexcept { return right_matrix(SplitQuaternion(0.0, v)); }

SplitQuaternion quaternion_from_left(const Mat4& m, double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be >= 0");
  if (!unchecked::all_finite(m)) throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
  const SplitQuaternion q(m(0, 0), m(1, 0), m(2, 0), m(3, 0));
  const double dev = mat_max_abs_diff(m, left_matrix(q));
  if (dev > tol) {
    throw Error(ErrorCode::NotALeftRepresentation,
                "matrix deviates from a left representation by " + format_number(dev));
  }
  return q;
}

std::string format(const Mat4& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < 4; ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < 4; ++c) {
      if (c) out += ',';
      out += format_number(m(r, c));
    }
    out += ']';
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Mat4& m) { return os << format(m); }

namespace unchecked {

Mat4 from_entries(const std::array<double, 16>& entries) noexcept { return build(entries); }

Mat4 mul(const Mat4& a, const Mat4& b) noexcept {
  std::array<double, 16> r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r[4 * i + j] = s;
    }
  }
  return build(r);
}

bool all_finite(const Mat4& m) noexcept {
  return std::all_of(m.data().begin(), m.data().end(), [](double x) { return std::isfinite(x); });
}

}  // namespace unchecked

}  // namespace coquat
