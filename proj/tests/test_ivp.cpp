#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "epcx/error.hpp"
#include "epcx/ivp.hpp"
#include "support.hpp"

namespace epcx {
namespace {

using test::dist;

IvpConfig config(const AlgebraParams& p, const Domain& d, double h, double dt, double t_end) {
  IvpConfig cfg;
  cfg.params = p;
  cfg.domain = d;
  cfg.grid = grid_for(d, h);
  cfg.dt = dt;
  cfg.t_end = t_end;
  return cfg;
}

RealCoeffs transport(const AlgebraParams& p) {
  return synthesize(FreeCoeffs{}, HoloPoly::constant(p, kOne), HoloPoly(p, {}), HoloPoly(p, {}), p);
}

double max_error(const ComplexField& f, auto exact) {
  double m = 0.0;
  for (std::size_t j = 0; j < f.grid.ny; ++j) {
    for (std::size_t i = 0; i < f.grid.nx; ++i) m = std::max(m, dist(f(i, j), exact(f.grid.x(i), f.grid.y(j))));
  }
  return m;
}

TEST(Ivp, TransportOfGenerator) {
  for (const AlgebraParams p : {AlgebraParams{2, 1}, AlgebraParams{1, 0}, AlgebraParams{3, -2}}) {
    for (const Domain d : {Domain{Rect{-1, -1, 1, 1}}, Domain{Disk{0, 0, 1}}}) {
      const IvpConfig cfg = config(p, d, 1.0 / 64, 1e-3, 0.1);
      const IvpRun run = solve(cfg, transport(p), HoloPoly::generator(p));
      ASSERT_EQ(run.times.size(), run.fields.size());
      EXPECT_NEAR(run.times.back(), 0.1, 1e-12);
      // w(t) = Z + t i.
      EXPECT_LT(max_error(run.fields.back(), [](double x, double y) { return GC{-y, x + 0.1}; }), 1e-8);
    }
  }
}

TEST(Ivp, ZeroOrderTermGivesExponential) {
  const AlgebraParams p{2, 1};
  RealCoeffs rc;
  rc.c1 = 1.0;
  rc.d2 = 1.0;
  const HoloPoly Z = HoloPoly::generator(p);
  const HoloPoly w0 = scale(-1.0, mul_poly(Z, Z));
  const IvpRun run = solve(config(p, Rect{-1, -1, 1, 1}, 1.0 / 32, 1e-3, 0.5), rc, w0);
  const double g = std::exp(0.5);
  const ComplexField& w = run.fields.back();
  for (std::size_t j = 0; j < w.grid.ny; ++j) {
    for (std::size_t i = 0; i < w.grid.nx; ++i) {
      const GC expect = g * eval(w0, w.grid.x(i), w.grid.y(j));
      EXPECT_LE(dist(w(i, j), expect), 1e-7 * std::max(1e-3, euclid(expect)));
    }
  }
}

TEST(Ivp, TimeOrderIsFour) {
  const AlgebraParams p{2, 1};
  RealCoeffs rc;
  rc.c1 = 1.0;
  rc.d2 = 1.0;
  const HoloPoly w0 = HoloPoly::constant(p, kOne);
  double err[2];
  for (int r = 0; r < 2; ++r) {
    const double dt = r == 0 ? 0.1 : 0.05;
    const IvpRun run = solve(config(p, Rect{-1, -1, 1, 1}, 0.25, dt, 1.0), rc, w0);
    err[r] = max_error(run.fields.back(), [](double, double) { return GC{std::numbers::e, 0}; });
  }
  EXPECT_GT(std::log2(err[0] / err[1]), 3.5);
}

TEST(Ivp, ZeroSystemIsStationary) {
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  const HoloPoly w0 = scale(-1.0, mul_poly(Z, Z));
  const IvpConfig cfg = config(p, Disk{0, 0, 1}, 1.0 / 16, 1e-2, 0.5);
  const IvpRun run = solve(cfg, RealCoeffs{}, w0);
  EXPECT_EQ(run.fields.front().values, run.fields.back().values);
  const DriftReport drift = holomorphy_drift(run);
  for (double g : drift.growth_rate) EXPECT_EQ(g, 0.0);
}

TEST(Ivp, OutputCadence) {
  const AlgebraParams p{2, 1};
  const IvpRun run = solve(config(p, Rect{-1, -1, 1, 1}, 0.125, 1e-3, 0.5), RealCoeffs{},
                           HoloPoly::generator(p));
  // 500 steps, every 5th recorded, plus t = 0.
  ASSERT_EQ(run.times.size(), 101u);
  EXPECT_NEAR(run.times[1], 0.005, 1e-15);
  ASSERT_EQ(run.cr_residual.size(), run.times.size());
  ASSERT_EQ(run.cr_residual.front().size(), 4u);
}

TEST(Ivp, SeriesExamples) {
  const AlgebraParams p{2, 1};
  OperatorCoeffs L{p};
  L.A = kOne;
  const HoloPoly Z = HoloPoly::generator(p);
  const HoloPoly w = series_solution(L, Z, 0.7, 12);
  EXPECT_EQ(w, add_poly(Z, HoloPoly::constant(p, GC{0, 0.7})));
  EXPECT_EQ(series_solution(L, Z, 0.0, 12), Z);

  OperatorCoeffs E{p};
  E.E = kOne;
  const HoloPoly e = series_solution(E, HoloPoly::constant(p, kOne), 1.0, 20);
  EXPECT_NEAR(e.coeff(0).x, std::numbers::e, 1e-12);
  EXPECT_EQ(e.coeff(0).y, 0.0);

  OperatorCoeffs B{p};
  B.B = kOne;
  try {
    (void)series_solution(B, Z, 0.1, 4);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::not_associated);
  }
  OperatorCoeffs big{p};
  big.A = HoloPoly::monomial(p, 9, kOne);
  EXPECT_THROW((void)series_solution(big, Z, 0.1, 12), Error);
}

RealCoeffs constant_system(const AlgebraParams& p) {
  return synthesize(FreeCoeffs{0.3, -0.2, 0.1, 0.4}, HoloPoly::constant(p, GC{1, 0.5}),
                    HoloPoly::constant(p, GC{0.2, 0.1}), HoloPoly::constant(p, GC{0.1, 0}), p);
}

TEST(Ivp, SolverAgreesWithSeries) {
  // Quadratic data keeps every stage quadratic, where the stencils are exact.
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  const RealCoeffs rc = constant_system(p);
  const HoloPoly w0 = add_poly(mul_poly(Z, Z), scale(GC{0.5, -1}, Z));
  IvpConfig cfg = config(p, Rect{-1, -1, 1, 1}, 1.0 / 64, 1e-3, 0.1);
  const IvpRun run = solve(cfg, rc, w0);
  const auto& last = run.err_vs_series.back();
  ASSERT_TRUE(last.back().has_value());
  EXPECT_LT(*last.back(), 1e-6);

  cfg.method = Integrator::series;
  const IvpRun s = solve(cfg, rc, w0);
  EXPECT_EQ(s.times.size(), run.times.size());
  EXPECT_EQ(*s.err_vs_series.back().back(), 0.0);
}

TEST(Ivp, SeriesGapShrinksQuadraticallyInH) {
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  const HoloPoly w0 = mul_poly(mul_poly(Z, Z), Z);
  double err[2];
  for (int r = 0; r < 2; ++r) {
    const IvpConfig cfg = config(p, Rect{-1, -1, 1, 1}, r == 0 ? 1.0 / 16 : 1.0 / 32, 1e-3, 0.1);
    err[r] = *solve(cfg, constant_system(p), w0).err_vs_series.back().back();
  }
  EXPECT_GT(std::log2(err[0] / err[1]), 1.9);
}

TEST(Ivp, SampledCoefficientsHaveNoSeriesColumn) {
  const AlgebraParams p{2, 1};
  const IvpConfig cfg = config(p, Rect{-1, -1, 1, 1}, 0.125, 1e-2, 0.1);
  RealCoeffs rc;
  rc.c1 = ScalarField(cfg.grid, 0.5);
  const IvpRun run = solve(cfg, rc, HoloPoly::generator(p));
  EXPECT_FALSE(run.err_vs_series.back().front().has_value());
}

TEST(Ivp, Linearity) {
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  FreeCoeffs free;
  free.a11 = 0.3 * BiPoly::x();
  free.b12 = 0.2;
  const RealCoeffs rc = synthesize(free, add_poly(HoloPoly::constant(p, kOne), scale(0.25, Z)),
                                   scale(GC{0.2, 0.1}, Z), HoloPoly(p, {}), p);
  const HoloPoly w0 = mul_poly(Z, Z), w1 = scale(GC{0.5, -1}, Z);
  const IvpConfig cfg = config(p, Rect{-1, -1, 1, 1}, 1.0 / 16, 1e-3, 0.2);
  const ComplexField a = solve(cfg, rc, add_poly(w0, w1)).fields.back();
  const ComplexField b = solve(cfg, rc, w0).fields.back();
  const ComplexField c = solve(cfg, rc, w1).fields.back();
  double m = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) m = std::max(m, dist(a.values[k], b.values[k] + c.values[k]));
  EXPECT_LE(m, 1e-9);
}

TEST(Ivp, PerturbedSystemDriftsFaster) {
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  FreeCoeffs free;
  free.a12 = 0.2;
  free.b11 = 0.1 * BiPoly::x() * BiPoly::y();
  RealCoeffs rc = synthesize(free, add_poly(HoloPoly::constant(p, kOne), scale(0.25, Z)),
                             scale(GC{0.2, 0.1}, Z), HoloPoly::constant(p, GC{0.1, -0.2}), p);
  const HoloPoly w0 = mul_poly(mul_poly(Z, Z), Z);
  const IvpConfig cfg = config(p, Rect{-1, -1, 1, 1}, 1.0 / 16, 1e-3, 0.25);
  const DriftReport base = holomorphy_drift(solve(cfg, rc, w0));
  rc.b12 = 0.5;
  const DriftReport pert = holomorphy_drift(solve(cfg, rc, w0));
  EXPECT_GT(pert.max_residual.back(), 10.0 * base.max_residual.back());
}

TEST(Ivp, ConicalDiagnosticIsMonotone) {
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  RealCoeffs rc = transport(p);
  rc.b12 = 0.5;
  IvpConfig cfg = config(p, Disk{0, 0, 1}, 1.0 / 32, 2e-3, 0.5);
  cfg.exhaustion_levels = 5;
  const IvpRun run = solve(cfg, rc, mul_poly(mul_poly(Z, Z), Z));
  const ConicalTable t = conical_diagnostic(run, cfg);
  ASSERT_EQ(t.rows.size(), 5u);
  EXPECT_TRUE(t.monotone);
  EXPECT_NEAR(t.threshold, 10.0 * (run.cr_residual[0][0] + 5.0 * cfg.grid.h * cfg.grid.h), 1e-15);
  for (std::size_t k = 1; k < t.rows.size(); ++k) {
    EXPECT_LT(t.rows[k].level.s, t.rows[k - 1].level.s);
  }
}

TEST(Ivp, Guards) {
  const AlgebraParams p{2, 1};
  IvpConfig cfg = config(p, Rect{-1, -1, 1, 1}, 0.125, 0.2, 0.4);
  try {
    (void)solve(cfg, transport(p), HoloPoly::generator(p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cfl_violation);
  }
  RealCoeffs grow;
  grow.c1 = 100.0;
  grow.d2 = 100.0;
  cfg.dt = 1e-2;
  cfg.t_end = 0.5;
  try {
    (void)solve(cfg, grow, HoloPoly::generator(p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_finite_state);
  }
  EXPECT_THROW((void)solve(cfg, RealCoeffs{}, HoloPoly::generator({1, 0})), Error);
  cfg.exhaustion_levels = 1;
  EXPECT_THROW((void)solve(cfg, RealCoeffs{}, HoloPoly::generator(p)), Error);
}

TEST(Ivp, CsvLayout) {
  const AlgebraParams p{2, 1};
  IvpConfig cfg = config(p, Rect{-1, -1, 1, 1}, 0.25, 0.05, 0.1);
  cfg.exhaustion_levels = 2;
  std::ostringstream os;
  write_csv(os, solve(cfg, transport(p), HoloPoly::generator(p)));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "t,level_index,s_value,cr_residual_max,sup_norm_w,err_vs_series");
  std::getline(is, line);
  EXPECT_EQ(line.substr(0, 6), "0,0,1,");
  int rows = 1;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3 * 2);
}

}  // namespace
}  // namespace epcx
