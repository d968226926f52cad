#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

#include "epcx/algebra.hpp"
#include "epcx/bipoly.hpp"
#include "epcx/grid.hpp"
#include "epcx/holo.hpp"
#include "epcx/operator.hpp"

namespace epcx {

/// Real coefficient descriptor: constant, polynomial in (x, y), or grid samples.
using Scalar = std::variant<double, BiPoly, ScalarField>;

/// Coefficients of the real system
///   u_t = a11 u_x + a12 u_y + a21 v_x + a22 v_y + c1 u + c2 v + c3
///   v_t = b11 u_x + b12 u_y + b21 v_x + b22 v_y + d1 u + d2 v + d3.
struct RealCoeffs {
  Scalar a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};
  Scalar b11{0.0}, b12{0.0}, b21{0.0}, b22{0.0};
  Scalar c1{0.0}, c2{0.0}, c3{0.0};
  Scalar d1{0.0}, d2{0.0}, d3{0.0};

  static constexpr std::array<std::string_view, 14> kNames{
      "a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22",
      "c1",  "c2",  "c3",  "d1",  "d2",  "d3"};

  /// Members in kNames order.
  [[nodiscard]] std::array<Scalar*, 14> members();
  [[nodiscard]] std::array<const Scalar*, 14> members() const;
};

/// The four coefficients left free by the synthesis.
struct FreeCoeffs {
  Scalar a11{0.0}, a12{0.0}, b11{0.0}, b12{0.0};
};

/// Value of a descriptor at grid node (i, j) of `grid`.
[[nodiscard]] double value_at(const Scalar& s, const GridSpec& grid, std::size_t i, std::size_t j);

/// Samples a descriptor on `grid` (Error{grid_mismatch} for a field on another grid).
[[nodiscard]] ScalarField lower(const Scalar& s, const GridSpec& grid);

/// The grid shared by the sampled descriptors of `rc`, if any.
/// Throws Error{grid_mismatch} when sampled descriptors disagree.
[[nodiscard]] std::optional<GridSpec> common_grid(const RealCoeffs& rc);

/// Complex form of the real system, coefficient by coefficient from the
/// explicit rewriting formulas. Each result has the widest kind among its
/// inputs: constants give GC, polynomials PolyPair, samples ComplexField.
/// Throws Error{alpha_zero}.
[[nodiscard]] OperatorCoeffs real_to_complex(const RealCoeffs& rc, const AlgebraParams& p);

/// Unknown ordering of coefficient_matrix columns.
inline constexpr std::array<std::string_view, 8> kMatrixUnknowns{
    "a11", "a12", "b12", "a21", "b21", "a22", "b11", "b22"};

using Matrix8 = Eigen::Matrix<double, 8, 8>;

/// Maps (a11, a12, b12, a21, b21, a22, b11, b22) to
/// (Re 2A, Im 2A, Re 2B, Im 2B, Re 2C, Im 2C, Re 2D, Im 2D).
/// Throws Error{alpha_zero}.
[[nodiscard]] Matrix8 coefficient_matrix(const AlgebraParams& p);

/// Determinant by LU with partial pivoting; equals -256 / alpha^4.
[[nodiscard]] double coefficient_determinant(const AlgebraParams& p);

/// coefficient_determinant(p) * alpha^4 / -256, i.e. 1 up to rounding.
[[nodiscard]] double det_check(const AlgebraParams& p);

/// Inverse of real_to_complex: a_ij, b_ij from the 8x8 system (one LU
/// factorization, applied per constant, per monomial, or per grid node), and
/// c_i, d_i from E, F, G. Throws Error{alpha_zero}, Error{solve_failure}.
[[nodiscard]] RealCoeffs complex_to_real(const OperatorCoeffs& oc, const AlgebraParams& p);

/// Real coefficients of the system whose complex form is associated to the
/// Cauchy-Riemann operator: given the free a11, a12, b11, b12 and holomorphic
/// A, E, G,
///   a21 = -alpha A2 + a12          a22 = alpha A1 - alpha a11 - beta a12
///   b21 = A1 - beta A2 + b12       b22 = alpha A2 - alpha b11 - beta b12
///   c1 = Re E, d1 = Im E, c2 = -alpha d1, d2 = c1 - beta d1, c3 + i d3 = G.
/// Throws Error{lemma1_inadmissible}, Error{params_mismatch}.
[[nodiscard]] RealCoeffs synthesize(const FreeCoeffs& free, const HoloPoly& A, const HoloPoly& E,
                                    const HoloPoly& G, const AlgebraParams& p);

/// Largest pointwise |difference| of two descriptor sets on `grid`.
[[nodiscard]] double max_difference(const RealCoeffs& a, const RealCoeffs& b, const GridSpec& grid);

}  // namespace epcx
