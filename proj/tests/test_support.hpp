#ifndef DISPOSITIONS_TEST_SUPPORT_HPP
#define DISPOSITIONS_TEST_SUPPORT_HPP

#include <algorithm>
#include <random>

#include "dispositions/core.hpp"

namespace dispositions::testing {

inline double uniform(std::mt19937_64& g, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

// Valid normalized payoff pair, both values kept a little away from the ends.
inline TranslucentPayoffs random_translucent(std::mt19937_64& g) {
  for (;;) {
    double a = uniform(g, 0.01, 0.99);
    double b = uniform(g, 0.01, 0.99);
    if (a > b) std::swap(a, b);
    if (b - a > 1e-3) return validate_translucent(a, b);
  }
}

inline TransparentPayoffs random_transparent(std::mt19937_64& g) {
  for (;;) {
    double v[3] = {uniform(g, -10, 10), uniform(g, -10, 10), uniform(g, -10, 10)};
    std::sort(v, v + 3);
    if (v[1] - v[0] > 1e-6 && v[2] - v[1] > 1e-6) return validate_transparent(v[0], v[1], v[2]);
  }
}

}  // namespace dispositions::testing

#endif
