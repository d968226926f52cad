#include "epcx/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "epcx/error.hpp"

namespace epcx {

void require_grid(const GridSpec& g) {
  if (g.nx < kMinGridNodes || g.ny < kMinGridNodes) {
    throw Error(Errc::grid_too_small, "grid is " + std::to_string(g.nx) + "x" +
                                          std::to_string(g.ny) + ", need at least 5x5");
  }
  if (!(g.h > 0.0) || !std::isfinite(g.h)) {
    throw Error(Errc::grid_too_small, "grid spacing must be positive");
  }
}

double max_norm(const ComplexField& f, std::size_t collar) {
  const GridSpec& g = f.grid;
  double m = 0.0;
  if (2 * collar >= g.nx || 2 * collar >= g.ny) return m;
  for (std::size_t j = collar; j < g.ny - collar; ++j) {
    for (std::size_t i = collar; i < g.nx - collar; ++i) m = std::max(m, euclid(f(i, j)));
  }
  return m;
}

GC interpolate(const ComplexField& f, double x, double y) {
  const GridSpec& g = f.grid;
  const double tx = (x - g.x0) / g.h;
  const double ty = (y - g.y0) / g.h;
  const double eps = 1e-9;
  if (tx < -eps || ty < -eps || tx > static_cast<double>(g.nx - 1) + eps ||
      ty > static_cast<double>(g.ny - 1) + eps) {
    throw Error(Errc::invalid_argument, "interpolation point outside the grid");
  }
  const auto i = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(tx))), g.nx - 2);
  const auto j = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(ty))), g.ny - 2);
  const double fx = tx - static_cast<double>(i);
  const double fy = ty - static_cast<double>(j);
  return (1 - fx) * (1 - fy) * f(i, j) + fx * (1 - fy) * f(i + 1, j) +
         (1 - fx) * fy * f(i, j + 1) + fx * fy * f(i + 1, j + 1);
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double distance_to_boundary(const Domain& d, double x, double y) {
  return std::visit(overloaded{
                        [&](const Rect& r) {
                          return std::min({x - r.x0, r.x1 - x, y - r.y0, r.y1 - y});
                        },
                        [&](const Disk& c) { return c.r - std::hypot(x - c.cx, y - c.cy); },
                    },
                    d);
}

double inradius(const Domain& d) {
  return std::visit(overloaded{
                        [](const Rect& r) { return 0.5 * std::min(r.x1 - r.x0, r.y1 - r.y0); },
                        [](const Disk& c) { return c.r; },
                    },
                    d);
}

GridSpec grid_for(const Domain& d, double h) {
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "grid spacing must be positive");
  const Rect box = std::visit(overloaded{
                                  [](const Rect& r) { return r; },
                                  [](const Disk& c) {
                                    return Rect{c.cx - c.r, c.cy - c.r, c.cx + c.r, c.cy + c.r};
                                  },
                              },
                              d);
  const double w = box.x1 - box.x0;
  const double ht = box.y1 - box.y0;
  if (!(w > 0.0) || !(ht > 0.0)) throw Error(Errc::invalid_argument, "degenerate domain");
  // One spacing for both axes; the x extent fixes it.
  const auto cells_x = static_cast<std::size_t>(std::max(1.0, std::round(w / h)));
  const double hh = w / static_cast<double>(cells_x);
  const auto cells_y = static_cast<std::size_t>(std::max(1.0, std::round(ht / hh)));
  GridSpec g{box.x0, box.y0, cells_x + 1, cells_y + 1, hh};
  require_grid(g);
  return g;
}

std::vector<GC> sample_points(const Domain& d, std::size_t resolution) {
  std::vector<GC> pts;
  const auto n = std::max<std::size_t>(resolution, 4);
  std::visit(overloaded{
                 [&](const Rect& r) {
                   for (std::size_t j = 0; j <= n; ++j) {
                     for (std::size_t i = 0; i <= n; ++i) {
                       pts.push_back({r.x0 + (r.x1 - r.x0) * static_cast<double>(i) / n,
                                      r.y0 + (r.y1 - r.y0) * static_cast<double>(j) / n});
                     }
                   }
                 },
                 [&](const Disk& c) {
                   for (std::size_t j = 0; j <= n; ++j) {
                     for (std::size_t i = 0; i <= n; ++i) {
                       const double x = c.cx - c.r + 2.0 * c.r * static_cast<double>(i) / n;
                       const double y = c.cy - c.r + 2.0 * c.r * static_cast<double>(j) / n;
                       if (std::hypot(x - c.cx, y - c.cy) <= c.r) pts.push_back({x, y});
                     }
                   }
                   const std::size_t m = 4 * n;
                   for (std::size_t k = 0; k < m; ++k) {
                     const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
                     pts.push_back({c.cx + c.r * std::cos(t), c.cy + c.r * std::sin(t)});
                   }
                 },
             },
             d);
  return pts;
}

}  // namespace epcx
