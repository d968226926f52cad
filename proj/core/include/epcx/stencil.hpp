#pragma once

#include "epcx/grid.hpp"

namespace epcx {

/// Accuracy of the first-derivative stencils.
///
/// second: central (f[k+1] - f[k-1]) / 2h inside, one-sided
///   (-3 f0 + 4 f1 - f2) / 2h at the edges; exact on quadratics.
/// fourth: five-point central stencil on nodes at least two cells from the
///   edge, second-order stencils on the two outermost lines.
enum class DiffOrder { second, fourth };

/// Width of the boundary band excluded from every residual the library reports.
inline constexpr std::size_t kCollar = 2;

[[nodiscard]] ScalarField partial_x(const ScalarField& f, DiffOrder order = DiffOrder::second);
[[nodiscard]] ScalarField partial_y(const ScalarField& f, DiffOrder order = DiffOrder::second);
[[nodiscard]] ComplexField partial_x(const ComplexField& f, DiffOrder order = DiffOrder::second);
[[nodiscard]] ComplexField partial_y(const ComplexField& f, DiffOrder order = DiffOrder::second);

/// Cauchy-Riemann operator (d_x + i d_y) / 2 with the algebra product for i.
/// Throws Error{grid_too_small}.
[[nodiscard]] ComplexField d_zbar(const ComplexField& f, DiffOrder order = DiffOrder::second);

/// Conjugate Cauchy-Riemann operator (d_x - i d_y) / 2.
[[nodiscard]] ComplexField d_z(const ComplexField& f, DiffOrder order = DiffOrder::second);

/// Interior sup of |d_zbar f| (collar kCollar).
[[nodiscard]] double cr_residual(const ComplexField& f, DiffOrder order = DiffOrder::second);

}  // namespace epcx
