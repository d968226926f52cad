#pragma once

#include <cstddef>
#include <vector>

#include "epcx/algebra.hpp"
#include "epcx/grid.hpp"
#include "epcx/holo.hpp"

namespace epcx {

/// Closed circle |z - center| = radius traversed counter-clockwise and
/// sampled at theta_k = 2 pi k / n_nodes, so node 0 sits at angle 0.
struct Contour {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 1.0;
  std::size_t n_nodes = 512;
};

inline constexpr std::size_t kMinContourNodes = 16;

/// Throws Error{invalid_argument} for radius <= 0 or fewer than 16 nodes.
void require_contour(const Contour& c);

/// Node positions z_k = center + r (cos theta_k, sin theta_k).
[[nodiscard]] std::vector<GC> contour_points(const Contour& c);

/// Trapezoid rule for the path integral of f dz~ with dz~ = dy - i dx =
/// r (cos theta + i sin theta) dtheta. `f_on_contour[k]` is f(z_k).
[[nodiscard]] GC contour_integral(const std::vector<GC>& f_on_contour, const Contour& c,
                                  const AlgebraParams& p);

/// Length of the contour measured with |dz~|_(alpha,beta) = sqrt(alpha dx^2 + beta dx dy + dy^2).
[[nodiscard]] double arc_length_ab(const Contour& c, const AlgebraParams& p);

/// Cauchy integral of the samples f(z_k): 1 / (2 pi ihat) * integral of
/// f(z) / (z - zeta)~ dz~. Same preconditions and errors as cauchy_eval.
[[nodiscard]] GC cauchy_from_samples(const std::vector<GC>& f_on_contour, const Contour& c,
                                     GC zeta, const AlgebraParams& p);

/// f(zeta) = 1 / (2 pi ihat) * integral of f(z) / (z - zeta)~ dz~ over the contour.
///
/// Elliptic only. Throws Error{zeta_on_contour} when zeta is within 1e-9 of a
/// node and Error{invalid_argument} when zeta is not inside the circle.
[[nodiscard]] GC cauchy_eval(const HoloPoly& f, const Contour& c, GC zeta);

/// Cauchy-Pompeiu representation of a sampled C^1 function:
/// boundary term (bilinear interpolation of f on the nodes) minus
/// 1 / (pi ihat) * area integral of d_zbar f / (z - zeta)~, by the midpoint
/// rule on grid nodes inside the disk, skipping nodes within 3h of zeta.
/// The grid must cover the disk. Error is O(h).
[[nodiscard]] GC cauchy_pompeiu_eval(const ComplexField& f, const Contour& c, GC zeta);

/// f'(zeta) = -i / (2 pi ihat) * integral of f(z) / ((z - zeta)~)^2 dz~.
[[nodiscard]] GC derivative_via_contour(const HoloPoly& f, const Contour& c, GC zeta);

}  // namespace epcx
