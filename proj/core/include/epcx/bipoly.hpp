#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "epcx/algebra.hpp"

namespace epcx {

/// Real polynomial sum_{i+j<=n} c_ij x^i y^j in two variables.
///
/// Used for coefficient descriptors of the real first-order system and, in
/// pairs, for GC-valued polynomial coefficients of the complex operator.
class BiPoly {
 public:
  BiPoly() = default;
  /// Constant polynomial.
  explicit BiPoly(double c);

  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(std::size_t i, std::size_t j, double c);

  /// Total degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] bool is_zero() const { return degree_ < 0; }

  /// Coefficient of x^i y^j (zero outside the stored range).
  [[nodiscard]] double coeff(std::size_t i, std::size_t j) const;
  void set_coeff(std::size_t i, std::size_t j, double c);

  /// Largest |c_ij|.
  [[nodiscard]] double max_abs_coeff() const;

  [[nodiscard]] double operator()(double x, double y) const;

  [[nodiscard]] BiPoly dx() const;
  [[nodiscard]] BiPoly dy() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(double s);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(double s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(BiPoly a, double s) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b);

 private:
  void ensure_degree(int n);
  void trim();
  [[nodiscard]] std::size_t stride() const { return static_cast<std::size_t>(cap_ + 1); }

  // Dense (cap_+1) x (cap_+1) table indexed [i * stride + j]; entries with
  // i + j > cap_ are always zero.
  std::vector<double> c_;
  int cap_ = -1;
  int degree_ = -1;
};

/// GC-valued polynomial U(x, y) + i V(x, y).
struct PolyPair {
  BiPoly re;
  BiPoly im;

  PolyPair() = default;
  PolyPair(BiPoly u, BiPoly v) : re(std::move(u)), im(std::move(v)) {}
  explicit PolyPair(const GC& c) : re(c.x), im(c.y) {}

  [[nodiscard]] GC operator()(double x, double y) const { return {re(x, y), im(x, y)}; }
  [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }
  [[nodiscard]] int degree() const { return std::max(re.degree(), im.degree()); }
  [[nodiscard]] double max_abs_coeff() const {
    return std::max(re.max_abs_coeff(), im.max_abs_coeff());
  }

  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

[[nodiscard]] PolyPair operator+(const PolyPair& a, const PolyPair& b);
[[nodiscard]] PolyPair operator-(const PolyPair& a, const PolyPair& b);
[[nodiscard]] PolyPair operator*(double s, const PolyPair& a);

/// Algebra product of two polynomial-valued numbers.
[[nodiscard]] PolyPair mul(const PolyPair& a, const PolyPair& b, const AlgebraParams& p);
[[nodiscard]] PolyPair mul(const GC& a, const PolyPair& b, const AlgebraParams& p);

/// Exact Cauchy-Riemann operators on polynomials:
/// d_zbar = (d_x + i d_y) / 2, d_z = (d_x - i d_y) / 2.
[[nodiscard]] PolyPair d_zbar(const PolyPair& f, const AlgebraParams& p);
[[nodiscard]] PolyPair d_z(const PolyPair& f, const AlgebraParams& p);

}  // namespace epcx
