#pragma once

#include <algorithm>
#include <cmath>

#include "coquat/coquat.hpp"
#include "oracle.hpp"

namespace testing {

inline oracle::Q raw(const coquat::SplitQuaternion& q) { return q.components(); }

inline double max_diff(const coquat::SplitQuaternion& a, const coquat::SplitQuaternion& b) {
  double m = 0.0;
  for (std::size_t c = 0; c < 4; ++c) m = std::max(m, std::abs(a[c] - b[c]));
  return m;
}

inline double max_diff(const coquat::SplitQuaternion& a, const oracle::Q& b) {
  double m = 0.0;
  for (std::size_t c = 0; c < 4; ++c) m = std::max(m, std::abs(a[c] - b[c]));
  return m;
}

inline double max_diff(const coquat::Vector3M& a, const coquat::Vector3M& b) {
  double m = 0.0;
  for (std::size_t c = 0; c < 3; ++c) m = std::max(m, std::abs(a[c] - b[c]));
  return m;
}

inline coquat::Mat4 rows(const coquat::Mat4::Rows& r) { return coquat::Mat4(r); }

}  // namespace testing
