#pragma once

// Shared helpers for tests: seeded random points on the variety.

#include <complex>
#include <random>

#include "bowditch/algebra.hpp"

namespace testing_support {

using bowditch::BoundaryData;
using bowditch::CharacterPoint;
using bowditch::Complex;

inline Complex random_complex(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  double re = u(rng);
  return {re, u(rng)};
}

// On-variety point from random (a, b, c, x, y, z) in the box.
inline CharacterPoint random_point(std::mt19937_64& rng,
                                   double half_width = 3.0) {
  Complex a = random_complex(rng, half_width), b = random_complex(rng, half_width),
          c = random_complex(rng, half_width);
  Complex x = random_complex(rng, half_width), y = random_complex(rng, half_width),
          z = random_complex(rng, half_width);
  BoundaryData w(x, y, z);
  Complex d = bowditch::solve_fourth(a, b, c, w, bowditch::Root::Plus);
  return CharacterPoint(a, b, c, d, x, y, z);
}

inline double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testing_support
