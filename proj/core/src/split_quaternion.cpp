#include "coquat/split_quaternion.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <ostream>

#include "coquat/error.hpp"

namespace coquat {
namespace {

struct BasisProduct {
  int index;
  int sign;
};

// Row = left factor, column = right factor, both in the order (1, i, j, k).
constexpr BasisProduct kTable[4][4] = {
    {{0, +1}, {1, +1}, {2, +1}, {3, +1}},  // 1
    {{1, +1}, {0, -1}, {3, +1}, {2, -1}},  // i: i, -1, k, -j
    {{2, +1}, {3, -1}, {0, +1}, {1, -1}},  // j: j, -k, 1, -i
    {{3, +1}, {2, +1}, {1, +1}, {0, +1}},  // k: k, j, i, 1
};

void require_finite(double x, ErrorCode code, const char* what) {
  if (!std::isfinite(x)) throw Error(code, what);
}

SplitQuaternion checked(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw Error(ErrorCode::OverflowedToInfinity, "split quaternion arithmetic overflowed");
  }
  return SplitQuaternion(a, b, c, d);
}

double band(double tau, double magnitude_sq) { return tau * std::max(1.0, magnitude_sq); }

}  // namespace

void ClassifyConfig::validate() const {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "classification tolerance must be finite and >= 0");
  }
}

std::string_view to_string(CausalCharacter c) noexcept {
  switch (c) {
    case CausalCharacter::Timelike: return "Timelike";
    case CausalCharacter::Spacelike: return "Spacelike";
    case CausalCharacter::Lightlike: return "Lightlike";
  }
  return "?";
}

// ---- Vector3M ---------------------------------------------------------------

Vector3M::Vector3M(double u1, double u2, double u3) : u_{u1, u2, u3} {
  for (double x : u_) require_finite(x, ErrorCode::NonFinite, "Minkowski vector component is not finite");
}

double Vector3M::euclidean_sq() const noexcept {
  return u_[0] * u_[0] + u_[1] * u_[1] + u_[2] * u_[2];
}

bool Vector3M::is_zero() const noexcept { return u_[0] == 0.0 && u_[1] == 0.0 && u_[2] == 0.0; }

Vector3M operator+(const Vector3M& u, const Vector3M& v) {
  return Vector3M(u.u1() + v.u1(), u.u2() + v.u2(), u.u3() + v.u3());
}
Vector3M operator-(const Vector3M& u, const Vector3M& v) {
  return Vector3M(u.u1() - v.u1(), u.u2() - v.u2(), u.u3() - v.u3());
}
Vector3M operator-(const Vector3M& u) { return Vector3M(-u.u1(), -u.u2(), -u.u3()); }
Vector3M operator*(double r, const Vector3M& u) {
  return Vector3M(r * u.u1(), r * u.u2(), r * u.u3());
}

double lorentz_inner(const Vector3M& u, const Vector3M& v) noexcept {
  return -u.u1() * v.u1() + u.u2() * v.u2() + u.u3() * v.u3();
}

Vector3M lorentz_cross(const Vector3M& u, const Vector3M& v) {
  return Vector3M(-(u.u2() * v.u3() - u.u3() * v.u2()),
                  -(u.u1() * v.u3() - u.u3() * v.u1()),
                  u.u1() * v.u2() - u.u2() * v.u1());
}

CausalCharacter classify_vector(const Vector3M& v, const ClassifyConfig& cfg) {
  cfg.validate();
  const double g = lorentz_inner(v, v);
  if (std::abs(g) <= band(cfg.tau, v.euclidean_sq())) return CausalCharacter::Lightlike;
  return g > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

// ---- SplitQuaternion --------------------------------------------------------

SplitQuaternion::SplitQuaternion(double q0, double q1, double q2, double q3) : q_{q0, q1, q2, q3} {
  for (double x : q_) require_finite(x, ErrorCode::NonFinite, "split quaternion component is not finite");
}

SplitQuaternion SplitQuaternion::basis(std::size_t idx) {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};
  c.at(idx) = 1.0;
  return SplitQuaternion(c[0], c[1], c[2], c[3]);
}

double SplitQuaternion::euclidean_sq() const noexcept {
  return q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3];
}

double SplitQuaternion::max_abs() const noexcept {
  double m = 0.0;
  for (double x : q_) m = std::max(m, std::abs(x));
  return m;
}

SplitQuaternion operator+(const SplitQuaternion& p, const SplitQuaternion& q) {
  return checked(p.q0() + q.q0(), p.q1() + q.q1(), p.q2() + q.q2(), p.q3() + q.q3());
}
SplitQuaternion operator-(const SplitQuaternion& p, const SplitQuaternion& q) {
  return checked(p.q0() - q.q0(), p.q1() - q.q1(), p.q2() - q.q2(), p.q3() - q.q3());
}
SplitQuaternion operator-(const SplitQuaternion& p) {
  return SplitQuaternion(-p.q0(), -p.q1(), -p.q2(), -p.q3());
}
SplitQuaternion operator*(double r, const SplitQuaternion& p) {
  return checked(r * p.q0(), r * p.q1(), r * p.q2(), r * p.q3());
}
SplitQuaternion operator*(const SplitQuaternion& p, double r) { return r * p; }
SplitQuaternion operator/(const SplitQuaternion& p, double r) {
  return checked(p.q0() / r, p.q1() / r, p.q2() / r, p.q3() / r);
}
SplitQuaternion operator*(const SplitQuaternion& p, const SplitQuaternion& q) { return mul(p, q); }

SplitQuaternion mul(const SplitQuaternion& p, const SplitQuaternion& q) {
  std::array<double, 4> r{0.0, 0.0, 0.0, 0.0};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const BasisProduct& e = kTable[a][b];
      r[e.index] += e.sign * (p[a] * q[b]);
    }
  }
  SplitQuaternion out = checked(r[0], r[1], r[2], r[3]);
#ifndef NDEBUG
  {
    const SplitQuaternion alt = mul_lorentz(p, q);
    const double scale = std::max(1.0, 4.0 * p.max_abs() * q.max_abs());
    for (std::size_t c = 0; c < 4; ++c) assert(std::abs(out[c] - alt[c]) <= 1e-13 * scale);
  }
#endif
  return out;
}

SplitQuaternion mul_lorentz(const SplitQuaternion& p, const SplitQuaternion& q) {
  const Vector3M vp = p.vector();
  const Vector3M vq = q.vector();
  const double s = p.scalar() * q.scalar() + lorentz_inner(vp, vq);
  const Vector3M cross = lorentz_cross(vp, vq);
  return checked(s,
                 p.scalar() * vq.u1() + q.scalar() * vp.u1() + cross.u1(),
                 p.scalar() * vq.u2() + q.scalar() * vp.u2() + cross.u2(),
                 p.scalar() * vq.u3() + q.scalar() * vp.u3() + cross.u3());
}

SplitQuaternion conjugate(const SplitQuaternion& q) {
  return SplitQuaternion(q.q0(), -q.q1(), -q.q2(), -q.q3());
}

double iq_form(const SplitQuaternion& q) noexcept {
  return q.q0() * q.q0() + q.q1() * q.q1() - q.q2() * q.q2() - q.q3() * q.q3();
}

double norm(const SplitQuaternion& q) noexcept { return std::sqrt(std::abs(iq_form(q))); }

CausalCharacter classify(const SplitQuaternion& q, const ClassifyConfig& cfg) {
  cfg.validate();
  const double iq = iq_form(q);
  if (std::abs(iq) <= band(cfg.tau, q.euclidean_sq())) return CausalCharacter::Lightlike;
  return iq > 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

SplitQuaternion normalize(const SplitQuaternion& q, const ClassifyConfig& cfg) {
  if (classify(q, cfg) == CausalCharacter::Lightlike) {
    throw Error(ErrorCode::LightlikeNormalization, "lightlike split quaternion has no unit representative");
  }
  return q / norm(q);
}

SplitQuaternion inverse(const SplitQuaternion& q, const ClassifyConfig& cfg) {
  if (classify(q, cfg) == CausalCharacter::Lightlike) {
    throw Error(ErrorCode::LightlikeInverse, "lightlike split quaternion is a zero divisor and has no inverse");
  }
  return conjugate(q) / iq_form(q);
}

// ---- formatting -------------------------------------------------------------

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format(const SplitQuaternion& q) {
  static constexpr std::string_view kUnits[4] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t c = 0; c < 4; ++c) {
    const double x = q[c];
    if (x == 0.0) continue;
    std::string term;
    if (c > 0 && (x == 1.0 || x == -1.0)) {
      term = x < 0.0 ? "-" : "";
    } else {
      term = format_number(x);
    }
    term += kUnits[c];
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const SplitQuaternion& q) { return os << format(q); }

std::ostream& operator<<(std::ostream& os, const Vector3M& v) {
  return os << '(' << format_number(v.u1()) << ',' << format_number(v.u2()) << ','
            << format_number(v.u3()) << ')';
}

std::ostream& operator<<(std::ostream& os, CausalCharacter c) { return os << to_string(c); }

}  // namespace coquat
