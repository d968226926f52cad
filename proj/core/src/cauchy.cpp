#include "epcx/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "epcx/error.hpp"
#include "epcx/stencil.hpp"

namespace epcx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOnContour = 1e-9;

// ihat^2 = -1 must hold before any kernel normalization is trusted.
GC checked_ihat(const AlgebraParams& p) {
  const GC ih = ihat(p);
  const GC sq = mul(ih, ih, p);
  if (euclid(sq - GC{-1.0, 0.0}) > 1e-12 * std::max(1.0, euclid(ih) * euclid(ih))) {
    throw Error(Errc::invalid_argument, "ihat^2 != -1 for the given parameters");
  }
  return ih;
}

void require_interior(const Contour& c, GC zeta) {
  for (const GC& z : contour_points(c)) {
    if (euclid(z - zeta) < kOnContour) {
      throw Error(Errc::zeta_on_contour, "zeta coincides with a contour node");
    }
  }
  if (!(std::hypot(zeta.x - c.cx, zeta.y - c.cy) < c.radius)) {
    throw Error(Errc::invalid_argument, "zeta is not inside the contour");
  }
}

// 1 / (z - zeta)~ at every node.
std::vector<GC> kernel(const Contour& c, GC zeta, const AlgebraParams& p) {
  std::vector<GC> k;
  for (const GC& z : contour_points(c)) k.push_back(inv(tilde(z - zeta), p));
  return k;
}

}  // namespace

void require_contour(const Contour& c) {
  if (!(c.radius > 0.0)) throw Error(Errc::invalid_argument, "contour radius must be positive");
  if (c.n_nodes < kMinContourNodes) {
    throw Error(Errc::invalid_argument, "contour needs at least 16 nodes");
  }
}

std::vector<GC> contour_points(const Contour& c) {
  require_contour(c);
  std::vector<GC> pts(c.n_nodes);
  for (std::size_t k = 0; k < c.n_nodes; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(c.n_nodes);
    pts[k] = {c.cx + c.radius * std::cos(t), c.cy + c.radius * std::sin(t)};
  }
  return pts;
}

GC contour_integral(const std::vector<GC>& f_on_contour, const Contour& c,
                    const AlgebraParams& p) {
  require_contour(c);
  if (f_on_contour.size() != c.n_nodes) {
    throw Error(Errc::invalid_argument, "sample count does not match the contour");
  }
  GC sum{};
  for (std::size_t k = 0; k < c.n_nodes; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(c.n_nodes);
    sum += mul(f_on_contour[k], GC{std::cos(t), std::sin(t)}, p);
  }
  return (c.radius * kTwoPi / static_cast<double>(c.n_nodes)) * sum;
}

double arc_length_ab(const Contour& c, const AlgebraParams& p) {
  require_contour(c);
  double sum = 0.0;
  for (std::size_t k = 0; k < c.n_nodes; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(c.n_nodes);
    const double dx = -std::sin(t);
    const double dy = std::cos(t);
    sum += std::sqrt(p.alpha * dx * dx + p.beta * dx * dy + dy * dy);
  }
  return c.radius * kTwoPi * sum / static_cast<double>(c.n_nodes);
}

GC cauchy_from_samples(const std::vector<GC>& f_on_contour, const Contour& c, GC zeta,
                       const AlgebraParams& p) {
  require_elliptic(p);
  const GC ih = checked_ihat(p);
  require_interior(c, zeta);
  const std::vector<GC> k = kernel(c, zeta, p);
  if (f_on_contour.size() != k.size()) {
    throw Error(Errc::invalid_argument, "sample count does not match the contour");
  }
  std::vector<GC> integrand(k.size());
  for (std::size_t n = 0; n < k.size(); ++n) integrand[n] = mul(f_on_contour[n], k[n], p);
  return mul(inv(kTwoPi * ih, p), contour_integral(integrand, c, p), p);
}

GC cauchy_eval(const HoloPoly& f, const Contour& c, GC zeta) {
  const std::vector<GC> pts = contour_points(c);
  std::vector<GC> values(pts.size());
  for (std::size_t n = 0; n < pts.size(); ++n) values[n] = eval(f, pts[n].x, pts[n].y);
  return cauchy_from_samples(values, c, zeta, f.params());
}

GC cauchy_pompeiu_eval(const ComplexField& f, const Contour& c, GC zeta) {
  const AlgebraParams& p = f.params;
  require_elliptic(p);
  require_grid(f.grid);
  const GC ih = checked_ihat(p);
  require_interior(c, zeta);
  const GridSpec& g = f.grid;
  const double slack = 1e-12;
  if (c.cx - c.radius < g.x0 - slack || c.cx + c.radius > g.x1() + slack ||
      c.cy - c.radius < g.y0 - slack || c.cy + c.radius > g.y1() + slack) {
    throw Error(Errc::invalid_argument, "grid does not cover the contour disk");
  }

  std::vector<GC> values;
  for (const GC& z : contour_points(c)) values.push_back(interpolate(f, z.x, z.y));
  const GC boundary = cauchy_from_samples(values, c, zeta, p);

  const ComplexField dzb = d_zbar(f);
  const double excluded = 3.0 * g.h;
  GC area{};
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      const GC z{g.x(i), g.y(j)};
      if (std::hypot(z.x - c.cx, z.y - c.cy) >= c.radius) continue;
      if (euclid(z - zeta) < excluded) continue;
      area += mul(dzb(i, j), inv(tilde(z - zeta), p), p);
    }
  }
  area *= g.h * g.h;
  return boundary - mul(inv(std::numbers::pi * ih, p), area, p);
}

GC derivative_via_contour(const HoloPoly& f, const Contour& c, GC zeta) {
  const AlgebraParams& p = f.params();
  require_elliptic(p);
  const GC ih = checked_ihat(p);
  require_interior(c, zeta);
  const std::vector<GC> pts = contour_points(c);
  const std::vector<GC> k = kernel(c, zeta, p);
  std::vector<GC> integrand(pts.size());
  for (std::size_t n = 0; n < pts.size(); ++n) {
    integrand[n] = mul(eval(f, pts[n].x, pts[n].y), mul(k[n], k[n], p), p);
  }
  const GC scaled = mul(inv(kTwoPi * ih, p), contour_integral(integrand, c, p), p);
  return -mul(kI, scaled, p);
}

}  // namespace epcx
