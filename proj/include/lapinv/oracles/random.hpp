#ifndef LAPINV_ORACLES_RANDOM_HPP
#define LAPINV_ORACLES_RANDOM_HPP

#include <random>

#include "lapinv/mpnum.hpp"

namespace lapinv::oracles {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Uniform draw carried exactly into a BigReal (the binary value is the sample).
inline mp::BigReal uniform_big(Rng& rng, double lo, double hi, int digits) {
  return mp::BigReal::from_double(uniform(rng, lo, hi), digits);
}

/// Uniform over the disc |z| < radius intersected with Re z > re_min.
inline mp::BigComplex uniform_disc(Rng& rng, double radius, double re_min, int digits) {
  for (;;) {
    const double x = uniform(rng, -radius, radius);
    const double y = uniform(rng, -radius, radius);
    if (x * x + y * y < radius * radius && x > re_min) {
      return {mp::BigReal::from_double(x, digits), mp::BigReal::from_double(y, digits)};
    }
  }
}

}  // namespace lapinv::oracles

#endif  // LAPINV_ORACLES_RANDOM_HPP
