#include "epcx/stencil.hpp"

#include <vector>

#include "epcx/parallel.hpp"

namespace epcx {

namespace {

// Differentiates n samples spaced `stride` apart, starting at in[0].
template <class T>
void diff_line(const T* in, T* out, std::size_t n, std::size_t stride, double h, DiffOrder order) {
  const double c2 = 1.0 / (2.0 * h);
  auto at = [&](std::size_t k) -> const T& { return in[k * stride]; };
  out[0] = c2 * (-3.0 * at(0) + 4.0 * at(1) - at(2));
  out[(n - 1) * stride] = c2 * (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3));
  if (order == DiffOrder::second) {
    for (std::size_t k = 1; k + 1 < n; ++k) out[k * stride] = c2 * (at(k + 1) - at(k - 1));
    return;
  }
  const double c4 = 1.0 / (12.0 * h);
  out[stride] = c2 * (at(2) - at(0));
  out[(n - 2) * stride] = c2 * (at(n - 1) - at(n - 3));
  for (std::size_t k = 2; k + 2 < n; ++k) {
    out[k * stride] = c4 * (at(k - 2) - 8.0 * at(k - 1) + 8.0 * at(k + 1) - at(k + 2));
  }
}

template <class T>
std::vector<T> diff_x(const std::vector<T>& in, const GridSpec& g, DiffOrder order) {
  require_grid(g);
  std::vector<T> out(in.size());
  parallel_for(g.ny, [&](std::size_t j) {
    diff_line(in.data() + j * g.nx, out.data() + j * g.nx, g.nx, 1, g.h, order);
  });
  return out;
}

template <class T>
std::vector<T> diff_y(const std::vector<T>& in, const GridSpec& g, DiffOrder order) {
  require_grid(g);
  std::vector<T> out(in.size());
  parallel_for(g.nx, [&](std::size_t i) {
    diff_line(in.data() + i, out.data() + i, g.ny, g.nx, g.h, order);
  });
  return out;
}

// Combines d_x f and d_y f into (d_x f + sign * i d_y f) / 2.
ComplexField cr_combine(const ComplexField& f, DiffOrder order, double sign) {
  const auto fx = diff_x(f.values, f.grid, order);
  const auto fy = diff_y(f.values, f.grid, order);
  ComplexField out(f.grid, f.params);
  for (std::size_t k = 0; k < fx.size(); ++k) {
    out.values[k] = 0.5 * (fx[k] + sign * mul(kI, fy[k], f.params));
  }
  return out;
}

}  // namespace

ScalarField partial_x(const ScalarField& f, DiffOrder order) {
  ScalarField out;
  out.grid = f.grid;
  out.values = diff_x(f.values, f.grid, order);
  return out;
}

ScalarField partial_y(const ScalarField& f, DiffOrder order) {
  ScalarField out;
  out.grid = f.grid;
  out.values = diff_y(f.values, f.grid, order);
  return out;
}

ComplexField partial_x(const ComplexField& f, DiffOrder order) {
  ComplexField out(f.grid, f.params);
  out.values = diff_x(f.values, f.grid, order);
  return out;
}

ComplexField partial_y(const ComplexField& f, DiffOrder order) {
  ComplexField out(f.grid, f.params);
  out.values = diff_y(f.values, f.grid, order);
  return out;
}

ComplexField d_zbar(const ComplexField& f, DiffOrder order) { return cr_combine(f, order, 1.0); }

ComplexField d_z(const ComplexField& f, DiffOrder order) { return cr_combine(f, order, -1.0); }

double cr_residual(const ComplexField& f, DiffOrder order) {
  return max_norm(d_zbar(f, order), kCollar);
}

}  // namespace epcx
