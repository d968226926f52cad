#pragma once

#include <cstddef>
#include <vector>

#include "epcx/algebra.hpp"
#include "epcx/grid.hpp"
#include "epcx/holo.hpp"

namespace epcx {

/// First-order interior estimate
///   |f'(zeta)| <= K2 sqrt(alpha) / (K1^2 dist(zeta, boundary)) * sup |f|.
struct InteriorEstimate {
  double lhs = 0.0;
  double rhs = 0.0;
  double sup = 0.0;
  double dist = 0.0;
  bool holds = false;
};

/// Elliptic only (Error{not_elliptic}); zeta must be interior
/// (Error{invalid_argument}). The supremum is sampled with
/// sample_points(domain, resolution); holds means lhs <= rhs (1 + 1e-9).
[[nodiscard]] InteriorEstimate interior_estimate_check(const HoloPoly& f, const Domain& domain,
                                                       GC zeta, std::size_t resolution = 256);

struct WeierstrassOptions {
  /// Grid spacing for the Cauchy-Riemann residual of the last element.
  double h = 1.0 / 128.0;
  /// Sampling resolution for the sup-norm differences.
  std::size_t resolution = 256;
  std::size_t probes = 10;
  std::size_t contour_nodes = 512;
};

/// |integral over C of (f_last - f_k) dz~|_(alpha,beta) against
/// (1 / K1^2) sup_C |f_last - f_k| l(C).
struct PathBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct WeierstrassReport {
  /// sup over the compact set of |f_{k+1} - f_k|.
  std::vector<double> sup_differences;
  /// sup_differences[k+1] / sup_differences[k]; 0 where both vanish.
  std::vector<double> decay_ratios;
  double max_ratio = 0.0;
  bool decreasing = true;
  bool geometric = true;
  /// Interior sup of |d_zbar f_last| with the second- and fourth-order stencils.
  double residual_second_order = 0.0;
  double residual_fourth_order = 0.0;
  /// Elliptic-only parts: Cauchy reproduction of f_last at interior probes
  /// and the path-integral bounds. Skipped (false) otherwise.
  bool elliptic_checks_run = false;
  double cauchy_max_error = 0.0;
  std::vector<PathBound> path_bounds;
};

/// Checks a sequence of holomorphic polynomials converging on `compact`:
/// uniform Cauchy differences, holomorphy of the last element, and that the
/// Cauchy integral over the inscribed circle reproduces it.
[[nodiscard]] WeierstrassReport weierstrass_check(const std::vector<HoloPoly>& sequence,
                                                  const Domain& compact,
                                                  const WeierstrassOptions& options = {});

/// Same checks for sampled fields sharing one grid; sup differences run over
/// grid nodes inside `compact`, and the Cauchy check compares the contour
/// integral of interpolated boundary values with the interpolated field.
[[nodiscard]] WeierstrassReport weierstrass_check(const std::vector<ComplexField>& sequence,
                                                  const Domain& compact,
                                                  const WeierstrassOptions& options = {});

}  // namespace epcx
