#include <cmath>
#include <numbers>

#include "coquat_tools/sampling.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace coquat;
using testing::max_diff;

namespace {

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

TEST_CASE("decompose: timelike with spacelike vector part") {
  const PolarForm f = decompose(SplitQuaternion(2, 0, 1, 0));
  CHECK(f.kind == PolarKind::TimelikeSpacelikeVec);
  CHECK(f.n == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  // acosh(2/sqrt 3) = ln sqrt 3
  CHECK(std::abs(f.theta - std::log(std::sqrt(3.0))) <= 1e-15);
  CHECK(std::abs(f.theta - 0.5493061443) <= 1e-10);
  CHECK(max_diff(f.eps, Vector3M(0, 1, 0)) == 0.0);
  CHECK(f.sign == 1);
  CHECK(max_diff(reconstruct(f), SplitQuaternion(2, 0, 1, 0)) <= 1e-15);
}

TEST_CASE("decompose: negative scalar part flips sign and axis") {
  const SplitQuaternion q(-2, 0, 1, 0);
  const PolarForm f = decompose(q);
  CHECK(f.kind == PolarKind::TimelikeSpacelikeVec);
  CHECK(f.sign == -1);
  CHECK(f.theta >= 0.0);
  CHECK(max_diff(f.eps, Vector3M(0, -1, 0)) == 0.0);
  CHECK(max_diff(reconstruct(f), q) <= 1e-15);
}

TEST_CASE("decompose: timelike with timelike vector part") {
  const PolarForm f = decompose(SplitQuaternion(1, 2, 1, 0));
  CHECK(f.kind == PolarKind::TimelikeTimelikeVec);
  CHECK(f.n == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(f.theta - std::numbers::pi / 3) <= 1e-15);
  const double r3 = std::sqrt(3.0);
  CHECK(max_diff(f.eps, Vector3M(2 / r3, 1 / r3, 0)) <= 1e-15);
  CHECK(std::abs(lorentz_inner(f.eps, f.eps) + 1.0) <= 1e-12);
}

TEST_CASE("decompose: spacelike") {
  const PolarForm f = decompose(SplitQuaternion(1, 0, 2, 0));
  CHECK(f.kind == PolarKind::Spacelike);
  CHECK(f.n == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  // asinh(1/sqrt 3) = ln sqrt 3
  CHECK(std::abs(f.theta - std::log(std::sqrt(3.0))) <= 1e-15);
  CHECK(max_diff(f.eps, Vector3M(0, 1, 0)) == 0.0);

  // Negative scalar part gives a negative angle.
  CHECK(decompose(SplitQuaternion(-1, 0, 2, 0)).theta < 0.0);
}

TEST_CASE("decompose: scalar timelike inputs") {
  for (double x : {1.0, 2.5, -3.0}) {
    const PolarForm f = decompose(SplitQuaternion(x));
    CHECK(f.kind == PolarKind::TimelikeSpacelikeVec);
    CHECK(f.theta == 0.0);
    CHECK(f.eps == Vector3M(0, 0, 1));
    CHECK(f.n == std::abs(x));
    CHECK(reconstruct(f) == SplitQuaternion(x));
  }
}

TEST_CASE("decompose: errors") {
  CHECK(code_of([] { decompose(SplitQuaternion(1, 0, 1, 0)); }) == ErrorCode::LightlikeNoPolarForm);
  CHECK(code_of([] { decompose(SplitQuaternion()); }) == ErrorCode::LightlikeNoPolarForm);
  // 1 + i + j: I = 1, vector part (1,1,0) is null.
  CHECK(code_of([] { decompose(SplitQuaternion(1, 1, 1, 0)); }) == ErrorCode::NullVectorPart);
}

TEST_CASE("reconstruct examples") {
  CHECK(reconstruct({PolarKind::TimelikeSpacelikeVec, 1.0, 0.0, Vector3M(0, 0, 1), 1}) == SplitQuaternion::one());
  const double r3 = std::sqrt(3.0);
  const SplitQuaternion ii =
      reconstruct({PolarKind::TimelikeTimelikeVec, 2.0, std::numbers::pi / 3, Vector3M(2 / r3, 1 / r3, 0), 1});
  CHECK(max_diff(ii, SplitQuaternion(1, 2, 1, 0)) <= 1e-15);
  const SplitQuaternion iii =
      reconstruct({PolarKind::Spacelike, r3, std::log(r3), Vector3M(0, 1, 0), 1});
  CHECK(max_diff(iii, SplitQuaternion(1, 0, 2, 0)) <= 1e-15);
}

TEST_CASE("reconstruct rejects malformed forms") {
  CHECK(code_of([] { reconstruct({PolarKind::Spacelike, 1.0, 0.1, Vector3M(1, 0, 0), 1}); }) ==
        ErrorCode::InvalidAxis);
  CHECK(code_of([] { reconstruct({PolarKind::TimelikeTimelikeVec, 1.0, 0.1, Vector3M(0, 1, 0), 1}); }) ==
        ErrorCode::InvalidAxis);
  CHECK(code_of([] { reconstruct({PolarKind::Spacelike, -1.0, 0.1, Vector3M(0, 1, 0), 1}); }) ==
        ErrorCode::InvalidPolarForm);
  CHECK(code_of([] { reconstruct({PolarKind::Spacelike, 1.0, 0.1, Vector3M(0, 1, 0), -1}); }) ==
        ErrorCode::InvalidPolarForm);
  CHECK(code_of([] { reconstruct({PolarKind::TimelikeSpacelikeVec, 1.0, 0.1, Vector3M(0, 1, 0), 2}); }) ==
        ErrorCode::InvalidPolarForm);
  // Slightly off-unit axes within 1e-9 are accepted.
  CHECK_NOTHROW(reconstruct({PolarKind::Spacelike, 1.0, 0.1, Vector3M(0, 1 + 1e-10, 0), 1}));
}

TEST_CASE("round trip, axis character and kind on random inputs") {
  sampling::Sampler s(11);
  int checked = 0;
  while (checked < 1000) {
    const SplitQuaternion q = s.box();
    const CausalCharacter qc = classify(q);
    if (qc == CausalCharacter::Lightlike) continue;
    const CausalCharacter vc = classify_vector(q.vector());
    if (qc == CausalCharacter::Timelike && vc == CausalCharacter::Lightlike) continue;
    ++checked;

    const PolarForm f = decompose(q);
    CHECK(max_diff(reconstruct(f), q) <= 1e-12 * std::max(1.0, q.max_abs()));
    CHECK(f.n > 0.0);
    const double g = lorentz_inner(f.eps, f.eps);
    // Rounding in <eps,eps> grows with the Euclidean size of the axis.
    const double axis_tol = 1e-12 * std::max(1.0, f.eps.euclidean_sq());
    switch (f.kind) {
      case PolarKind::TimelikeSpacelikeVec:
        CHECK(qc == CausalCharacter::Timelike);
        CHECK(vc == CausalCharacter::Spacelike);
        CHECK(std::abs(g - 1.0) <= axis_tol);
        CHECK(f.theta >= 0.0);
        break;
      case PolarKind::TimelikeTimelikeVec:
        CHECK(qc == CausalCharacter::Timelike);
        CHECK(vc == CausalCharacter::Timelike);
        CHECK(std::abs(g + 1.0) <= axis_tol);
        CHECK(f.theta >= 0.0);
        CHECK(f.theta <= std::numbers::pi);
        break;
      case PolarKind::Spacelike:
        CHECK(qc == CausalCharacter::Spacelike);
        CHECK(std::abs(g - 1.0) <= axis_tol);
        CHECK(f.sign == 1);
        break;
    }
  }
}
