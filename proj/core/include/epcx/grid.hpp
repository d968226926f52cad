#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "epcx/algebra.hpp"

namespace epcx {

/// Uniform rectangular grid: node (i, j) sits at (x0 + i h, y0 + j h),
/// 0 <= i < nx, 0 <= j < ny. Samples are stored row-major with rows along y,
/// i.e. index = j * nx + i.
struct GridSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  double h = 0.0;

  [[nodiscard]] double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
  [[nodiscard]] double y(std::size_t j) const { return y0 + static_cast<double>(j) * h; }
  [[nodiscard]] double x1() const { return x(nx - 1); }
  [[nodiscard]] double y1() const { return y(ny - 1); }
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
  [[nodiscard]] std::size_t size() const { return nx * ny; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Smallest node count per axis that central differences with an interior
/// margin need.
inline constexpr std::size_t kMinGridNodes = 5;

/// Throws Error{grid_too_small} if nx or ny < kMinGridNodes, or h <= 0.
void require_grid(const GridSpec& g);

/// Real samples on a grid.
struct ScalarField {
  GridSpec grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const GridSpec& g, double fill = 0.0) : grid(g), values(g.size(), fill) {}

  [[nodiscard]] double& operator()(std::size_t i, std::size_t j) { return values[grid.index(i, j)]; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
    return values[grid.index(i, j)];
  }
};

/// GC samples on a grid, tagged with the algebra they live in.
struct ComplexField {
  GridSpec grid;
  AlgebraParams params;
  std::vector<GC> values;

  ComplexField() = default;
  ComplexField(const GridSpec& g, const AlgebraParams& p, GC fill = {})
      : grid(g), params(p), values(g.size(), fill) {}

  [[nodiscard]] GC& operator()(std::size_t i, std::size_t j) { return values[grid.index(i, j)]; }
  [[nodiscard]] const GC& operator()(std::size_t i, std::size_t j) const {
    return values[grid.index(i, j)];
  }
};

/// Largest euclidean sample norm over nodes at least `collar` cells away from
/// the grid boundary.
[[nodiscard]] double max_norm(const ComplexField& f, std::size_t collar = 0);

/// Bilinear interpolation; (x, y) must lie inside the grid rectangle.
[[nodiscard]] GC interpolate(const ComplexField& f, double x, double y);

struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 1.0;
  double y1 = 1.0;
};

struct Disk {
  double cx = 0.0;
  double cy = 0.0;
  double r = 1.0;
};

/// Bounded planar domain: axis-aligned rectangle or disk.
using Domain = std::variant<Rect, Disk>;

/// Euclidean distance from an interior point to the boundary; negative outside.
[[nodiscard]] double distance_to_boundary(const Domain& d, double x, double y);

/// Largest inward offset for which the offset domain is non-empty.
[[nodiscard]] double inradius(const Domain& d);

/// Grid over the bounding box of `d` with spacing close to `h`; the spacing is
/// adjusted so the box edges are nodes.
[[nodiscard]] GridSpec grid_for(const Domain& d, double h);

/// Points that sample the closed domain for suprema: a (resolution+1)^2
/// lattice over the bounding box (edges included) restricted to `d`; disks
/// additionally get 4*resolution points on the circle, starting at angle 0.
[[nodiscard]] std::vector<GC> sample_points(const Domain& d, std::size_t resolution);

}  // namespace epcx
