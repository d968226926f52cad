#include "epcx/holo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epcx/error.hpp"
#include "epcx/parallel.hpp"

namespace epcx {

namespace {

void require_same(const HoloPoly& f, const HoloPoly& g) {
  if (!(f.params() == g.params())) {
    throw Error(Errc::params_mismatch, "polynomials belong to different algebras");
  }
}

}  // namespace

HoloPoly::HoloPoly(const AlgebraParams& p, std::vector<GC> coeffs)
    : params_(p), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == GC{}) coeffs_.pop_back();
  if (degree() > kMaxDegree) {
    throw Error(Errc::degree_overflow,
                "degree " + std::to_string(degree()) + " exceeds " + std::to_string(kMaxDegree));
  }
}

HoloPoly HoloPoly::constant(const AlgebraParams& p, GC c) { return HoloPoly(p, {c}); }

HoloPoly HoloPoly::generator(const AlgebraParams& p) { return HoloPoly(p, {GC{}, kOne}); }

HoloPoly HoloPoly::monomial(const AlgebraParams& p, int k, GC c) {
  if (k < 0) throw Error(Errc::invalid_argument, "negative monomial degree");
  if (k > kMaxDegree) throw Error(Errc::degree_overflow, "monomial degree too large");
  std::vector<GC> cs(static_cast<std::size_t>(k) + 1);
  cs.back() = c;
  return HoloPoly(p, std::move(cs));
}

GC HoloPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

GC eval(const HoloPoly& f, double x, double y) {
  const GC z = generator(x, y);
  const AlgebraParams& p = f.params();
  GC acc{};
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = mul(acc, z, p) + *it;
  return acc;
}

HoloPoly derive(const HoloPoly& f) {
  if (f.degree() < 1) return HoloPoly(f.params(), {});
  std::vector<GC> out(static_cast<std::size_t>(f.degree()));
  for (int k = 1; k <= f.degree(); ++k) {
    out[static_cast<std::size_t>(k - 1)] = mul(static_cast<double>(k) * f.coeff(k), kI, f.params());
  }
  return HoloPoly(f.params(), std::move(out));
}

HoloPoly add_poly(const HoloPoly& f, const HoloPoly& g) {
  require_same(f, g);
  const auto n = static_cast<std::size_t>(std::max(f.degree(), g.degree()) + 1);
  std::vector<GC> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = f.coeff(static_cast<int>(k)) + g.coeff(static_cast<int>(k));
  }
  return HoloPoly(f.params(), std::move(out));
}

HoloPoly sub_poly(const HoloPoly& f, const HoloPoly& g) { return add_poly(f, scale(-1.0, g)); }

HoloPoly mul_poly(const HoloPoly& f, const HoloPoly& g) {
  require_same(f, g);
  if (f.is_zero() || g.is_zero()) return HoloPoly(f.params(), {});
  const int n = f.degree() + g.degree();
  if (n > kMaxDegree) {
    throw Error(Errc::degree_overflow,
                "product degree " + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));
  }
  std::vector<GC> out(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= f.degree(); ++a) {
    for (int b = 0; b <= g.degree(); ++b) {
      out[static_cast<std::size_t>(a + b)] += mul(f.coeff(a), g.coeff(b), f.params());
    }
  }
  return HoloPoly(f.params(), std::move(out));
}

HoloPoly scale(const GC& c, const HoloPoly& f) {
  std::vector<GC> out(f.coeffs());
  for (GC& v : out) v = mul(c, v, f.params());
  return HoloPoly(f.params(), std::move(out));
}

HoloPoly scale(double s, const HoloPoly& f) {
  std::vector<GC> out(f.coeffs());
  for (GC& v : out) v *= s;
  return HoloPoly(f.params(), std::move(out));
}

ComplexField to_field(const HoloPoly& f, const GridSpec& grid) {
  ComplexField out(grid, f.params());
  parallel_for(grid.ny, [&](std::size_t j) {
    for (std::size_t i = 0; i < grid.nx; ++i) out(i, j) = eval(f, grid.x(i), grid.y(j));
  });
  return out;
}

double sup_norm(const HoloPoly& f, const Domain& region, std::size_t resolution) {
  double m = 0.0;
  for (const GC& pt : sample_points(region, resolution)) m = std::max(m, euclid(eval(f, pt.x, pt.y)));
  return m;
}

PolyPair to_poly_pair(const HoloPoly& f) {
  const AlgebraParams& p = f.params();
  const PolyPair z{-1.0 * BiPoly::y(), BiPoly::x()};
  PolyPair acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = mul(acc, z, p) + PolyPair(*it);
  }
  return acc;
}

std::optional<HoloPoly> lift_holomorphic(const PolyPair& f, const AlgebraParams& p, double tol) {
  const int n = f.degree();
  if (n > kMaxDegree) return std::nullopt;
  std::vector<GC> cs(static_cast<std::size_t>(std::max(n, -1) + 1));
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const auto kk = static_cast<std::size_t>(k);
    cs[kk] = {sign * f.re.coeff(0, kk), sign * f.im.coeff(0, kk)};
  }
  HoloPoly candidate(p, std::move(cs));
  const PolyPair diff = to_poly_pair(candidate) - f;
  const double scale_ref = std::max(1.0, f.max_abs_coeff());
  if (diff.max_abs_coeff() > tol * scale_ref) return std::nullopt;
  return candidate;
}

}  // namespace epcx
