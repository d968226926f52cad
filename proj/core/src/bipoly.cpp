#include "epcx/bipoly.hpp"

#include <algorithm>
#include <cmath>

namespace epcx {

BiPoly::BiPoly(double c) {
  if (c != 0.0) {
    ensure_degree(0);
    c_[0] = c;
    degree_ = 0;
  }
}

BiPoly BiPoly::x() { return monomial(1, 0, 1.0); }
BiPoly BiPoly::y() { return monomial(0, 1, 1.0); }

BiPoly BiPoly::monomial(std::size_t i, std::size_t j, double c) {
  BiPoly p;
  p.set_coeff(i, j, c);
  return p;
}

double BiPoly::coeff(std::size_t i, std::size_t j) const {
  if (static_cast<int>(i + j) > cap_) return 0.0;
  return c_[i * stride() + j];
}

void BiPoly::set_coeff(std::size_t i, std::size_t j, double c) {
  const int n = static_cast<int>(i + j);
  if (n > cap_) {
    if (c == 0.0) return;
    ensure_degree(n);
  }
  c_[i * stride() + j] = c;
  trim();
}

double BiPoly::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double BiPoly::operator()(double x, double y) const {
  // Horner in x over Horner-in-y rows.
  double acc = 0.0;
  for (int i = degree_; i >= 0; --i) {
    double row = 0.0;
    for (int j = degree_ - i; j >= 0; --j) {
      row = row * y + c_[static_cast<std::size_t>(i) * stride() + static_cast<std::size_t>(j)];
    }
    acc = acc * x + row;
  }
  return acc;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (int i = 1; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) {
      r.set_coeff(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j),
                  i * coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 1; i + j <= degree_; ++j) {
      r.set_coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1),
                  j * coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  ensure_degree(o.degree_);
  for (int i = 0; i <= o.degree_; ++i) {
    for (int j = 0; i + j <= o.degree_; ++j) {
      const auto ii = static_cast<std::size_t>(i);
      const auto jj = static_cast<std::size_t>(j);
      c_[ii * stride() + jj] += o.coeff(ii, jj);
    }
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += (-1.0) * o; }

BiPoly& BiPoly::operator*=(double s) {
  for (double& v : c_) v *= s;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.ensure_degree(a.degree_ + b.degree_);
  for (int i1 = 0; i1 <= a.degree_; ++i1) {
    for (int j1 = 0; i1 + j1 <= a.degree_; ++j1) {
      const double ca = a.coeff(static_cast<std::size_t>(i1), static_cast<std::size_t>(j1));
      if (ca == 0.0) continue;
      for (int i2 = 0; i2 <= b.degree_; ++i2) {
        for (int j2 = 0; i2 + j2 <= b.degree_; ++j2) {
          const auto i = static_cast<std::size_t>(i1 + i2);
          const auto j = static_cast<std::size_t>(j1 + j2);
          r.c_[i * r.stride() + j] +=
              ca * b.coeff(static_cast<std::size_t>(i2), static_cast<std::size_t>(j2));
        }
      }
    }
  }
  r.trim();
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.degree_ != b.degree_) return false;
  for (int i = 0; i <= a.degree_; ++i) {
    for (int j = 0; i + j <= a.degree_; ++j) {
      const auto ii = static_cast<std::size_t>(i);
      const auto jj = static_cast<std::size_t>(j);
      if (a.coeff(ii, jj) != b.coeff(ii, jj)) return false;
    }
  }
  return true;
}

void BiPoly::ensure_degree(int n) {
  if (n <= cap_) return;
  std::vector<double> grown(static_cast<std::size_t>((n + 1) * (n + 1)), 0.0);
  const auto new_stride = static_cast<std::size_t>(n + 1);
  for (int i = 0; i <= cap_; ++i) {
    for (int j = 0; i + j <= cap_; ++j) {
      const auto ii = static_cast<std::size_t>(i);
      const auto jj = static_cast<std::size_t>(j);
      grown[ii * new_stride + jj] = c_[ii * stride() + jj];
    }
  }
  c_ = std::move(grown);
  cap_ = n;
}

void BiPoly::trim() {
  degree_ = -1;
  for (int n = cap_; n >= 0 && degree_ < 0; --n) {
    for (int i = 0; i <= n; ++i) {
      if (c_[static_cast<std::size_t>(i) * stride() + static_cast<std::size_t>(n - i)] != 0.0) {
        degree_ = n;
        break;
      }
    }
  }
}

PolyPair operator+(const PolyPair& a, const PolyPair& b) { return {a.re + b.re, a.im + b.im}; }
PolyPair operator-(const PolyPair& a, const PolyPair& b) { return {a.re - b.re, a.im - b.im}; }
PolyPair operator*(double s, const PolyPair& a) { return {s * a.re, s * a.im}; }

PolyPair mul(const PolyPair& a, const PolyPair& b, const AlgebraParams& p) {
  const BiPoly yy = a.im * b.im;
  return {a.re * b.re - p.alpha * yy, a.re * b.im + b.re * a.im - p.beta * yy};
}

PolyPair mul(const GC& a, const PolyPair& b, const AlgebraParams& p) {
  return mul(PolyPair(a), b, p);
}

PolyPair d_zbar(const PolyPair& f, const AlgebraParams& p) {
  const BiPoly vy = f.im.dy();
  return {0.5 * (f.re.dx() - p.alpha * vy), 0.5 * (f.im.dx() + f.re.dy() - p.beta * vy)};
}

PolyPair d_z(const PolyPair& f, const AlgebraParams& p) {
  const BiPoly vy = f.im.dy();
  return {0.5 * (f.re.dx() + p.alpha * vy), 0.5 * (f.im.dx() - f.re.dy() + p.beta * vy)};
}

}  // namespace epcx
