#pragma once

#include <algorithm>
#include <cmath>

namespace mule {

// Relative float comparison with an absolute floor of 1 for near-zero values.
// 1e-9 is the tolerance used for every cost identity in the project.
inline bool nearly_equal(double a, double b, double rtol = 1e-9) {
  return std::abs(a - b) <= rtol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace mule
