#pragma once

#include <cmath>

namespace epcx {

/// Parameters of the structure polynomial X^2 + beta X + alpha, so that the
/// imaginary unit satisfies i^2 = -alpha - beta i.
///
/// (1, 0) gives the ordinary complex numbers, (-1, 0) the hyperbolic numbers
/// and (0, 0) the dual numbers.
struct AlgebraParams {
  double alpha = 1.0;
  double beta = 0.0;

  /// 4 alpha - beta^2.
  [[nodiscard]] constexpr double discriminant() const { return 4.0 * alpha - beta * beta; }

  /// No zero divisors; |.|_(alpha,beta) is a multiplicative norm.
  [[nodiscard]] constexpr bool elliptic() const { return discriminant() > 0.0; }

  /// alpha beta^2 - 4 alpha^2 != 0, the regime where associated first-order
  /// operators are characterized by B = F = 0 and A, E, G holomorphic.
  [[nodiscard]] constexpr bool lemma1_admissible() const {
    return alpha != 0.0 && beta * beta != 4.0 * alpha;
  }

  friend constexpr bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

/// A generalized complex number x + i y. Arithmetic that involves i^2 needs
/// AlgebraParams and is therefore spelled as free functions (mul, inv, ...);
/// the operators below are the parameter-free vector-space operations.
struct GC {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const GC&, const GC&) = default;

  constexpr GC& operator+=(const GC& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr GC& operator-=(const GC& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr GC& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }
};

[[nodiscard]] constexpr GC operator+(GC a, const GC& b) { return a += b; }
[[nodiscard]] constexpr GC operator-(GC a, const GC& b) { return a -= b; }
[[nodiscard]] constexpr GC operator-(const GC& a) { return {-a.x, -a.y}; }
[[nodiscard]] constexpr GC operator*(double s, GC a) { return a *= s; }
[[nodiscard]] constexpr GC operator*(GC a, double s) { return a *= s; }

inline constexpr GC kOne{1.0, 0.0};
inline constexpr GC kI{0.0, 1.0};

/// Default absolute threshold on |Q(z)| below which inv() reports a zero divisor.
inline constexpr double kSingularEpsilon = 1e-14;

[[nodiscard]] constexpr GC mul(const GC& a, const GC& b, const AlgebraParams& p) {
  return {a.x * b.x - p.alpha * a.y * b.y, a.x * b.y + b.x * a.y - p.beta * a.y * b.y};
}

/// x - i y. Not multiplicative unless beta = 0 (see algebra tests).
[[nodiscard]] constexpr GC conj(const GC& z) { return {z.x, -z.y}; }

/// z~ = y - i x, the rotated variable of the Cauchy kernel and of dz~ = dy - i dx.
[[nodiscard]] constexpr GC tilde(const GC& z) { return {z.y, -z.x}; }

/// Q(z) = x^2 - beta x y + alpha y^2 = z * (x - beta y - i y).
[[nodiscard]] constexpr double quadratic_form(const GC& z, const AlgebraParams& p) {
  return z.x * z.x - p.beta * z.x * z.y + p.alpha * z.y * z.y;
}

/// Euclidean length |z| = |z|_(1,0).
[[nodiscard]] inline double euclid(const GC& z) { return std::hypot(z.x, z.y); }

/// Throws Error{singular_element} when |Q(z)| <= eps.
[[nodiscard]] GC inv(const GC& z, const AlgebraParams& p, double eps = kSingularEpsilon);

/// |z|_(alpha,beta) = sqrt(Q(z)). Elliptic parameters only.
[[nodiscard]] double norm_ab(const GC& z, const AlgebraParams& p);

/// K1, K2 with K1 |z|_(alpha,beta) <= |z| <= K2 |z|_(alpha,beta).
struct NormConstants {
  double k1 = 1.0;
  double k2 = 1.0;
};

/// Sharp constants from the eigenvalues of [[1, -beta/2], [-beta/2, alpha]]:
/// k1 = 1/sqrt(lambda_max), k2 = 1/sqrt(lambda_min).
[[nodiscard]] NormConstants equivalence_constants(const AlgebraParams& p);

/// (beta + 2 i) / sqrt(4 alpha - beta^2); squares to -1 and has unit
/// (alpha,beta)-norm. Elliptic parameters only.
[[nodiscard]] GC ihat(const AlgebraParams& p);

/// Throws Error{not_elliptic} unless p.elliptic().
void require_elliptic(const AlgebraParams& p);

}  // namespace epcx
