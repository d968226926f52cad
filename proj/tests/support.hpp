#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "epcx/algebra.hpp"
#include "epcx/random.hpp"

namespace epcx::test {

// Left multiplication by a as a 2x2 matrix acting on (x, y):
// a * (1) = a and a * i = a.x i + a.y i^2 with i^2 = -alpha - beta i.
inline GC matrix_mul(const GC& a, const GC& b, const AlgebraParams& p) {
  const std::array<double, 4> m{a.x, -p.alpha * a.y, a.y, a.x - p.beta * a.y};
  return {m[0] * b.x + m[1] * b.y, m[2] * b.x + m[3] * b.y};
}

inline double dist(const GC& a, const GC& b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline GC random_gc(Rng& rng, double r = 2.0) { return {rng.uniform(-r, r), rng.uniform(-r, r)}; }

inline AlgebraParams random_elliptic(Rng& rng) {
  const double alpha = rng.uniform(0.2, 5.0);
  const double lim = 2.0 * std::sqrt(alpha) * 0.95;
  return {alpha, rng.uniform(-lim, lim)};
}

// At (1, 0) the algebra is C and the generator is Z = -y + i x = i z.
inline std::complex<double> to_complex(const GC& z) { return {z.x, z.y}; }

}  // namespace epcx::test
