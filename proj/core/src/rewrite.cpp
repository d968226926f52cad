#include "epcx/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "epcx/error.hpp"

namespace epcx {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Variant index doubles as the kind order: constant < polynomial < sampled.
enum class Kind { constant = 0, polynomial = 1, sampled = 2 };

Kind kind_of(const Scalar& s) { return static_cast<Kind>(s.index()); }

struct Term {
  double w;
  const Scalar* s;
};

struct Target {
  Kind kind = Kind::constant;
  std::optional<GridSpec> grid;

  void absorb(const Scalar& s) {
    kind = std::max(kind, kind_of(s));
    if (const auto* f = std::get_if<ScalarField>(&s)) {
      if (grid && !(*grid == f->grid)) {
        throw Error(Errc::grid_mismatch, "sampled coefficients live on different grids");
      }
      grid = f->grid;
    }
  }
};

BiPoly as_poly(const Scalar& s) {
  if (const auto* c = std::get_if<double>(&s)) return BiPoly(*c);
  return std::get<BiPoly>(s);
}

Scalar combine(std::initializer_list<Term> terms, const Target& t) {
  switch (t.kind) {
    case Kind::constant: {
      double acc = 0.0;
      for (const Term& term : terms) acc += term.w * std::get<double>(*term.s);
      return acc;
    }
    case Kind::polynomial: {
      BiPoly acc;
      for (const Term& term : terms) {
        if (term.w != 0.0) acc += term.w * as_poly(*term.s);
      }
      if (acc.degree() <= 0) return acc.coeff(0, 0);
      return acc;
    }
    case Kind::sampled: {
      const GridSpec& g = *t.grid;
      ScalarField acc(g);
      for (const Term& term : terms) {
        if (term.w == 0.0) continue;
        for (std::size_t j = 0; j < g.ny; ++j) {
          for (std::size_t i = 0; i < g.nx; ++i) acc(i, j) += term.w * value_at(*term.s, g, i, j);
        }
      }
      return acc;
    }
  }
  return 0.0;
}

Scalar combine_rows(const double* w, const std::array<Scalar, 8>& xs, const Target& t) {
  return combine({{w[0], &xs[0]}, {w[1], &xs[1]}, {w[2], &xs[2]}, {w[3], &xs[3]},
                  {w[4], &xs[4]}, {w[5], &xs[5]}, {w[6], &xs[6]}, {w[7], &xs[7]}},
                 t);
}

Coefficient assemble(Scalar re, Scalar im, const AlgebraParams& p) {
  if (std::holds_alternative<ScalarField>(re) || std::holds_alternative<ScalarField>(im)) {
    const GridSpec g = std::holds_alternative<ScalarField>(re) ? std::get<ScalarField>(re).grid
                                                               : std::get<ScalarField>(im).grid;
    ComplexField out(g, p);
    for (std::size_t j = 0; j < g.ny; ++j) {
      for (std::size_t i = 0; i < g.nx; ++i) out(i, j) = {value_at(re, g, i, j), value_at(im, g, i, j)};
    }
    return out;
  }
  if (std::holds_alternative<double>(re) && std::holds_alternative<double>(im)) {
    return GC{std::get<double>(re), std::get<double>(im)};
  }
  return PolyPair(as_poly(re), as_poly(im));
}

std::pair<Scalar, Scalar> split(const Coefficient& c, const AlgebraParams& p) {
  auto from_pair = [](const PolyPair& f) -> std::pair<Scalar, Scalar> {
    auto simple = [](const BiPoly& b) -> Scalar {
      if (b.degree() <= 0) return b.coeff(0, 0);
      return b;
    };
    return {simple(f.re), simple(f.im)};
  };
  return std::visit(
      overloaded{
          [](const GC& v) -> std::pair<Scalar, Scalar> { return {v.x, v.y}; },
          [&](const HoloPoly& f) {
            if (!(f.params() == p)) throw Error(Errc::params_mismatch, "coefficient belongs to another algebra");
            return from_pair(to_poly_pair(f));
          },
          [&](const PolyPair& f) { return from_pair(f); },
          [&](const ComplexField& f) -> std::pair<Scalar, Scalar> {
            if (!(f.params == p)) throw Error(Errc::params_mismatch, "coefficient belongs to another algebra");
            ScalarField re(f.grid), im(f.grid);
            for (std::size_t k = 0; k < f.values.size(); ++k) {
              re.values[k] = f.values[k].x;
              im.values[k] = f.values[k].y;
            }
            return {std::move(re), std::move(im)};
          },
      },
      c);
}

void require_alpha(const AlgebraParams& p) {
  if (p.alpha == 0.0) throw Error(Errc::alpha_zero, "the rewriting needs alpha != 0");
}

}  // namespace

std::array<Scalar*, 14> RealCoeffs::members() {
  return {&a11, &a12, &a21, &a22, &b11, &b12, &b21, &b22, &c1, &c2, &c3, &d1, &d2, &d3};
}

std::array<const Scalar*, 14> RealCoeffs::members() const {
  return {&a11, &a12, &a21, &a22, &b11, &b12, &b21, &b22, &c1, &c2, &c3, &d1, &d2, &d3};
}

double value_at(const Scalar& s, const GridSpec& grid, std::size_t i, std::size_t j) {
  return std::visit(overloaded{
                        [](double c) { return c; },
                        [&](const BiPoly& b) { return b(grid.x(i), grid.y(j)); },
                        [&](const ScalarField& f) { return f(i, j); },
                    },
                    s);
}

ScalarField lower(const Scalar& s, const GridSpec& grid) {
  if (const auto* f = std::get_if<ScalarField>(&s)) {
    if (!(f->grid == grid)) throw Error(Errc::grid_mismatch, "sampled coefficient lives on another grid");
    return *f;
  }
  ScalarField out(grid);
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) out(i, j) = value_at(s, grid, i, j);
  }
  return out;
}

std::optional<GridSpec> common_grid(const RealCoeffs& rc) {
  Target t;
  for (const Scalar* s : rc.members()) t.absorb(*s);
  return t.grid;
}

OperatorCoeffs real_to_complex(const RealCoeffs& rc, const AlgebraParams& p) {
  require_alpha(p);
  Target t;
  for (const Scalar* s : rc.members()) t.absorb(*s);

  const double ia = 1.0 / p.alpha;
  const double ba = p.beta / p.alpha;
  auto half = [&](std::initializer_list<Term> terms) {
    Scalar s = combine(terms, t);
    std::visit(overloaded{
                   [](double& c) { c *= 0.5; },
                   [](BiPoly& b) { b *= 0.5; },
                   [](ScalarField& f) {
                     for (double& v : f.values) v *= 0.5;
                   },
               },
               s);
    return s;
  };

  OperatorCoeffs oc;
  oc.params = p;
  oc.A = assemble(half({{1, &rc.a11}, {2 * ba, &rc.a12}, {-1, &rc.b12}, {-ba, &rc.a21},
                        {1, &rc.b21}, {ia, &rc.a22}}),
                  half({{1, &rc.b11}, {ia, &rc.a12}, {ba, &rc.b12}, {-ia, &rc.a21}, {ia, &rc.b22}}), p);
  oc.B = assemble(half({{1, &rc.a11}, {1, &rc.b12}, {ba, &rc.a21}, {-1, &rc.b21}, {ia, &rc.a22}}),
                  half({{1, &rc.b11}, {-ia, &rc.a12}, {ia, &rc.a21}, {ba, &rc.b12}, {ia, &rc.b22}}), p);
  oc.C = assemble(half({{1, &rc.a11}, {-2 * ba, &rc.a12}, {1, &rc.b12}, {-ba, &rc.a21},
                        {1, &rc.b21}, {-ia, &rc.a22}}),
                  half({{1, &rc.b11}, {-ia, &rc.a12}, {-ia, &rc.a21}, {-ba, &rc.b12}, {-ia, &rc.b22}}),
                  p);
  oc.D = assemble(half({{1, &rc.a11}, {-1, &rc.b12}, {ba, &rc.a21}, {-1, &rc.b21}, {-ia, &rc.a22}}),
                  half({{1, &rc.b11}, {ia, &rc.a12}, {ia, &rc.a21}, {-ba, &rc.b12}, {-ia, &rc.b22}}), p);
  oc.E = assemble(half({{1, &rc.c1}, {-ba, &rc.c2}, {1, &rc.d2}}), half({{-ia, &rc.c2}, {1, &rc.d1}}), p);
  oc.F = assemble(half({{1, &rc.c1}, {ba, &rc.c2}, {-1, &rc.d2}}), half({{ia, &rc.c2}, {1, &rc.d1}}), p);
  oc.G = assemble(combine({{1, &rc.c3}}, t), combine({{1, &rc.d3}}, t), p);
  return oc;
}

Matrix8 coefficient_matrix(const AlgebraParams& p) {
  require_alpha(p);
  const double ia = 1.0 / p.alpha;
  const double ba = p.beta / p.alpha;
  Matrix8 m;
  // clang-format off
  m << 1,  2 * ba, -1,  -ba,  1,  ia, 0,  0,
       0,  ia,      ba, -ia,  0,  0,  1,  ia,
       1,  0,       1,   ba, -1,  ia, 0,  0,
       0, -ia,      ba,  ia,  0,  0,  1,  ia,
       1, -2 * ba,  1,  -ba,  1, -ia, 0,  0,
       0, -ia,     -ba, -ia,  0,  0,  1, -ia,
       1,  0,      -1,   ba, -1, -ia, 0,  0,
       0,  ia,     -ba,  ia,  0,  0,  1, -ia;
  // clang-format on
  return m;
}

double coefficient_determinant(const AlgebraParams& p) {
  return Eigen::PartialPivLU<Matrix8>(coefficient_matrix(p)).determinant();
}

double det_check(const AlgebraParams& p) {
  const double a2 = p.alpha * p.alpha;
  return coefficient_determinant(p) * a2 * a2 / -256.0;
}

RealCoeffs complex_to_real(const OperatorCoeffs& oc, const AlgebraParams& p) {
  require_alpha(p);
  const Matrix8 m = coefficient_matrix(p);
  const Eigen::PartialPivLU<Matrix8> lu(m);
  const double det = lu.determinant();
  if (!std::isfinite(det) || det == 0.0) throw Error(Errc::solve_failure, "coefficient matrix is singular");
  const Matrix8 minv = lu.solve(Matrix8::Identity());
  if (!minv.allFinite() || (m * minv - Matrix8::Identity()).cwiseAbs().maxCoeff() > 1e-8) {
    throw Error(Errc::solve_failure, "coefficient matrix solve lost accuracy");
  }

  auto [a_re, a_im] = split(oc.A, p);
  auto [b_re, b_im] = split(oc.B, p);
  auto [c_re, c_im] = split(oc.C, p);
  auto [d_re, d_im] = split(oc.D, p);
  auto [e_re, e_im] = split(oc.E, p);
  auto [f_re, f_im] = split(oc.F, p);
  auto [g_re, g_im] = split(oc.G, p);

  const std::array<Scalar, 8> rhs{a_re, a_im, b_re, b_im, c_re, c_im, d_re, d_im};
  Target t;
  for (const Scalar& s : rhs) t.absorb(s);
  for (const Scalar* s : {&e_re, &e_im, &f_re, &f_im, &g_re, &g_im}) t.absorb(*s);

  // Right-hand sides are twice the complex coefficients.
  Eigen::Matrix<double, 8, 8, Eigen::RowMajor> w = 2.0 * minv;
  std::array<Scalar, 8> x;
  for (int r = 0; r < 8; ++r) x[static_cast<std::size_t>(r)] = combine_rows(w.row(r).data(), rhs, t);

  RealCoeffs rc;
  rc.a11 = std::move(x[0]);
  rc.a12 = std::move(x[1]);
  rc.b12 = std::move(x[2]);
  rc.a21 = std::move(x[3]);
  rc.b21 = std::move(x[4]);
  rc.a22 = std::move(x[5]);
  rc.b11 = std::move(x[6]);
  rc.b22 = std::move(x[7]);
  rc.c1 = combine({{1, &e_re}, {1, &f_re}}, t);
  rc.d1 = combine({{1, &e_im}, {1, &f_im}}, t);
  rc.c2 = combine({{p.alpha, &f_im}, {-p.alpha, &e_im}}, t);
  rc.d2 = combine({{p.beta, &f_im}, {-p.beta, &e_im}, {-1, &f_re}, {1, &e_re}}, t);
  rc.c3 = combine({{1, &g_re}}, t);
  rc.d3 = combine({{1, &g_im}}, t);
  return rc;
}

RealCoeffs synthesize(const FreeCoeffs& free, const HoloPoly& A, const HoloPoly& E,
                      const HoloPoly& G, const AlgebraParams& p) {
  if (!p.lemma1_admissible()) {
    throw Error(Errc::lemma1_inadmissible, "alpha beta^2 - 4 alpha^2 must be nonzero");
  }
  for (const HoloPoly* f : {&A, &E, &G}) {
    if (!(f->params() == p)) throw Error(Errc::params_mismatch, "coefficient belongs to another algebra");
  }
  const auto [a1, a2] = split(A, p);
  const auto [e1, e2] = split(E, p);
  const auto [g1, g2] = split(G, p);

  Target t;
  for (const Scalar* s : {&free.a11, &free.a12, &free.b11, &free.b12, &a1, &a2, &e1, &e2, &g1, &g2}) {
    t.absorb(*s);
  }
  const double al = p.alpha;
  const double be = p.beta;

  RealCoeffs rc;
  rc.a11 = combine({{1, &free.a11}}, t);
  rc.a12 = combine({{1, &free.a12}}, t);
  rc.b11 = combine({{1, &free.b11}}, t);
  rc.b12 = combine({{1, &free.b12}}, t);
  rc.a21 = combine({{-al, &a2}, {1, &free.a12}}, t);
  rc.a22 = combine({{al, &a1}, {-al, &free.a11}, {-be, &free.a12}}, t);
  rc.b21 = combine({{1, &a1}, {-be, &a2}, {1, &free.b12}}, t);
  rc.b22 = combine({{al, &a2}, {-al, &free.b11}, {-be, &free.b12}}, t);
  rc.c1 = combine({{1, &e1}}, t);
  rc.d1 = combine({{1, &e2}}, t);
  rc.c2 = combine({{-al, &e2}}, t);
  rc.d2 = combine({{1, &e1}, {-be, &e2}}, t);
  rc.c3 = combine({{1, &g1}}, t);
  rc.d3 = combine({{1, &g2}}, t);
  return rc;
}

double max_difference(const RealCoeffs& a, const RealCoeffs& b, const GridSpec& grid) {
  const auto ma = a.members();
  const auto mb = b.members();
  double m = 0.0;
  for (std::size_t k = 0; k < ma.size(); ++k) {
    for (std::size_t j = 0; j < grid.ny; ++j) {
      for (std::size_t i = 0; i < grid.nx; ++i) {
        m = std::max(m, std::abs(value_at(*ma[k], grid, i, j) - value_at(*mb[k], grid, i, j)));
      }
    }
  }
  return m;
}

}  // namespace epcx
