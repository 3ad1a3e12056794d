#pragma once

#include <cmath>

namespace pwss::detail {

// Integer ceiling tolerant of representation error in rate*count products:
// values a hair above an integer still round down to it.
inline int ceil_count(double x) {
  return static_cast<int>(std::ceil(x - 1e-9));
}

}  // namespace pwss::detail
