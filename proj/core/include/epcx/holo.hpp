#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "epcx/algebra.hpp"
#include "epcx/bipoly.hpp"
#include "epcx/grid.hpp"

namespace epcx {

/// Highest degree a HoloPoly may reach.
inline constexpr int kMaxDegree = 64;

/// The holomorphic generator Z(x, y) = -y + i x. It is annihilated by d_zbar
/// for every (alpha, beta), and d_z Z = i.
[[nodiscard]] constexpr GC generator(double x, double y) { return {-y, x}; }

/// Generalized-holomorphic polynomial f = sum_k c_k Z^k.
///
/// Holomorphic by construction: Z is, and the class is closed under sums and
/// products. Trailing zero coefficients are dropped, so the zero polynomial
/// has no coefficients and degree -1.
class HoloPoly {
 public:
  HoloPoly() = default;
  /// Throws Error{degree_overflow} past kMaxDegree.
  HoloPoly(const AlgebraParams& p, std::vector<GC> coeffs);

  static HoloPoly constant(const AlgebraParams& p, GC c);
  /// f = Z.
  static HoloPoly generator(const AlgebraParams& p);
  /// f = c Z^k.
  static HoloPoly monomial(const AlgebraParams& p, int k, GC c);

  [[nodiscard]] const std::vector<GC>& coeffs() const { return coeffs_; }
  [[nodiscard]] const AlgebraParams& params() const { return params_; }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of Z^k; zero beyond the degree.
  [[nodiscard]] GC coeff(int k) const;

  friend bool operator==(const HoloPoly&, const HoloPoly&) = default;

 private:
  AlgebraParams params_{};
  std::vector<GC> coeffs_;
};

/// Horner evaluation at (x, y).
[[nodiscard]] GC eval(const HoloPoly& f, double x, double y);

/// Complex derivative f' = d_z f = sum_k k c_k i Z^(k-1).
[[nodiscard]] HoloPoly derive(const HoloPoly& f);

/// Throw Error{params_mismatch} when f and g belong to different algebras.
[[nodiscard]] HoloPoly add_poly(const HoloPoly& f, const HoloPoly& g);
[[nodiscard]] HoloPoly sub_poly(const HoloPoly& f, const HoloPoly& g);
[[nodiscard]] HoloPoly mul_poly(const HoloPoly& f, const HoloPoly& g);

/// c * f under the algebra product.
[[nodiscard]] HoloPoly scale(const GC& c, const HoloPoly& f);
/// s * f for a real s.
[[nodiscard]] HoloPoly scale(double s, const HoloPoly& f);

[[nodiscard]] ComplexField to_field(const HoloPoly& f, const GridSpec& grid);

/// Largest euclidean |f| over sample_points(region, resolution).
[[nodiscard]] double sup_norm(const HoloPoly& f, const Domain& region,
                              std::size_t resolution = 256);

/// Expansion into x, y monomials.
[[nodiscard]] PolyPair to_poly_pair(const HoloPoly& f);

/// Recovers the HoloPoly whose expansion is `f`, if there is one.
///
/// On the line x = 0 the generator is the real number -y, so the candidate
/// coefficients are read off f(0, y); the candidate is accepted when its
/// expansion matches f coefficientwise within `tol` (relative to the largest
/// coefficient).
[[nodiscard]] std::optional<HoloPoly> lift_holomorphic(const PolyPair& f,
                                                       const AlgebraParams& p,
                                                       double tol = 1e-12);

}  // namespace epcx
