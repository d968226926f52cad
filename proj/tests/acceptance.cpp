// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "epcx/algebra.hpp"
#include "epcx/cauchy.hpp"
#include "epcx/estimates.hpp"
#include "epcx/ivp.hpp"
#include "epcx/operator.hpp"
#include "epcx/rewrite.hpp"
#include "support.hpp"

using namespace epcx;
using test::dist;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

GridSpec square(double h) {
  const auto n = static_cast<std::size_t>(std::llround(2.0 / h)) + 1;
  return {-1.0, -1.0, n, n, h};
}

ScalarField field(const GridSpec& g, const std::function<double(double, double)>& fn) {
  ScalarField f(g);
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) f(i, j) = fn(g.x(i), g.y(j));
  }
  return f;
}

// Every IVP run made by the suite, for the conical-domain check.
struct Recorded {
  std::string name;
  IvpConfig cfg;
  IvpRun run;
};
std::vector<Recorded> g_runs;

IvpRun record(const std::string& name, const IvpConfig& cfg, const RealCoeffs& rc, const HoloPoly& w0) {
  IvpRun run = solve(cfg, rc, w0);
  g_runs.push_back({name, cfg, run});
  g_runs.back().run.fields.clear();
  return run;
}

Outcome determinant() {
  Rng rng(101);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const AlgebraParams p{rng.uniform(0.1, 10.0), rng.uniform(-5.0, 5.0)};
    const double a2 = p.alpha * p.alpha;
    worst = std::max(worst, std::abs(coefficient_determinant(p) * a2 * a2 + 256.0) / 256.0);
  }
  return {worst <= 1e-9, fmt("worst relative error %.2e over 50 pairs", worst)};
}

Outcome classical_reduction() {
  const AlgebraParams p{1, 0};
  const NormConstants k = equivalence_constants(p);
  const InteriorEstimate e = interior_estimate_check(HoloPoly::generator(p), Disk{0, 0, 1}, GC{});
  // |f'(0)| = |i| = 1 and sup |Z| / dist = 1 / 1.
  const bool ok = k.k1 == 1.0 && k.k2 == 1.0 && e.holds && std::abs(e.lhs - 1.0) <= 1e-9 &&
                  std::abs(e.rhs - 1.0) <= 1e-9;
  return {ok, fmt("K=(%.17g, %.17g), lhs %.12f, rhs %.12f", k.k1, k.k2, e.lhs, e.rhs)};
}

Outcome ihat_square() {
  Rng rng(103);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const AlgebraParams p = test::random_elliptic(rng);
    const GC j = ihat(p);
    worst = std::max(worst, dist(test::matrix_mul(j, j, p), GC{-1.0, 0.0}));
  }
  return {worst <= 1e-12, fmt("worst |ihat^2 + 1| = %.2e over 100 pairs", worst)};
}

Outcome norm_multiplicativity() {
  Rng rng(104);
  const AlgebraParams settings[] = {{2, 1}, {1, 0}, {5, -3}, {0.3, 0.5}, {10, 6}};
  double worst = 0.0;
  for (const AlgebraParams& p : settings) {
    for (int n = 0; n < 10000; ++n) {
      const GC a = test::random_gc(rng, 3.0), b = test::random_gc(rng, 3.0);
      const double rhs = norm_ab(a, p) * norm_ab(b, p);
      if (rhs == 0.0) continue;
      worst = std::max(worst, std::abs(norm_ab(mul(a, b, p), p) - rhs) / rhs);
    }
  }
  return {worst <= 1e-12, fmt("worst relative error %.2e over 5 x 10^4 pairs", worst)};
}

Outcome cauchy_reproduction() {
  Rng rng(105);
  const AlgebraParams params[] = {{2, 1}, {1, 0}, {3, -1}};
  double worst = 0.0;
  bool monotone = true;
  for (const AlgebraParams& p : params) {
    const HoloPoly Z = HoloPoly::generator(p);
    const std::vector<HoloPoly> fs{HoloPoly::constant(p, kOne), Z, scale(-1.0, mul_poly(Z, Z)),
                                   scale(GC{-p.beta, -1.0}, Z)};
    const Contour c{0.2, -0.1, 1.0, 512};
    for (int n = 0; n < 20; ++n) {
      const double r = 0.9 * std::sqrt(rng.uniform()), t = 2 * std::numbers::pi * rng.uniform();
      const GC zeta{c.cx + r * std::cos(t), c.cy + r * std::sin(t)};
      for (const HoloPoly& f : fs) {
        const GC exact = eval(f, zeta.x, zeta.y);
        worst = std::max(worst, dist(cauchy_eval(f, c, zeta), exact));
        double prev = 1e300;
        for (std::size_t nodes = 16; nodes <= 512; nodes *= 2) {
          const double err = dist(cauchy_eval(f, Contour{c.cx, c.cy, c.radius, nodes}, zeta), exact);
          // Once at rounding level the error no longer carries information.
          if (prev > 1e-13 && err > prev) monotone = false;
          prev = err;
        }
      }
    }
  }
  return {worst <= 1e-6 && monotone,
          fmt("worst error %.2e at 512 nodes, monotone under doubling: %s", worst, monotone ? "yes" : "no")};
}

Outcome association() {
  const AlgebraParams p{2, 1};
  const double hs[] = {1.0 / 32, 1.0 / 64};
  double worst_res = 0.0, worst_order = 1e300;
  const HoloPoly Z = HoloPoly::generator(p);
  const HoloPoly A = add_poly(HoloPoly::constant(p, kOne), scale(0.25, Z));
  const HoloPoly E = scale(GC{0.2, 0.1}, Z);
  const HoloPoly G = HoloPoly::constant(p, GC{0.1, -0.2});
  for (int n = 0; n < 20; ++n) {
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(n);
    double res[2];
    for (int r = 0; r < 2; ++r) {
      const GridSpec g = square(hs[r]);
      Rng noise(seed);
      FreeCoeffs free;
      for (Scalar* s : {&free.a11, &free.a12, &free.b11, &free.b12}) {
        ScalarField f(g);
        for (double& v : f.values) v = noise.uniform(-1.0, 1.0);
        *s = f;
      }
      const RealCoeffs rc = synthesize(free, A, E, G, p);
      res[r] = association_residual(real_to_complex(rc, p), {}, g);
    }
    worst_res = std::max(worst_res, res[1] / (5.0 * hs[1] * hs[1]));
    worst_order = std::min(worst_order, std::log2(res[0] / res[1]));
  }
  OperatorCoeffs L{p};
  L.B = kOne;
  const double b = association_residual(L, {scale(-1.0, mul_poly(Z, Z))}, square(1.0 / 64));
  const double rel = std::abs(b - 2.0 * p.alpha) / (2.0 * p.alpha);
  const bool ok = worst_res <= 1.0 && worst_order >= 1.9 && rel <= 0.05;
  return {ok, fmt("(a) worst residual %.3f x 5h^2, worst order %.2f; (b) B=1 residual %.4f vs 2 alpha = %.1f",
                  worst_res, worst_order, b, 2.0 * p.alpha)};
}

RealCoeffs random_real(Rng& rng, int kind) {
  RealCoeffs rc;
  for (Scalar* s : rc.members()) {
    if (kind == 0) {
      *s = rng.uniform(-2.0, 2.0);
    } else {
      BiPoly b;
      for (std::size_t i = 0; i <= 2; ++i) {
        for (std::size_t j = 0; i + j <= 2; ++j) b.set_coeff(i, j, rng.uniform(-2.0, 2.0));
      }
      *s = b;
    }
  }
  return rc;
}

Outcome round_trip() {
  Rng rng(107);
  const GridSpec g = square(0.25);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double alpha = rng.uniform(0.1, 5.0) * (n % 4 == 3 ? -1.0 : 1.0);
    const AlgebraParams p{alpha, rng.uniform(-3.0, 3.0)};
    const RealCoeffs rc = random_real(rng, n % 2);
    const OperatorCoeffs oc = real_to_complex(rc, p);
    worst = std::max(worst, max_difference(rc, complex_to_real(oc, p), g));
    const OperatorCoeffs again = real_to_complex(complex_to_real(oc, p), p);
    for (const auto& [a, b] : {std::pair{&oc.A, &again.A}, {&oc.B, &again.B}, {&oc.C, &again.C},
                               {&oc.D, &again.D}, {&oc.E, &again.E}, {&oc.F, &again.F}, {&oc.G, &again.G}}) {
      for (std::size_t j = 0; j < g.ny; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
          worst = std::max(worst, dist(value_at(*a, g, i, j), value_at(*b, g, i, j)));
        }
      }
    }
  }
  return {worst <= 1e-10, fmt("worst composition error %.2e over 100 sets", worst)};
}

Outcome ivp_exactness() {
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  const RealCoeffs rc = synthesize(FreeCoeffs{}, HoloPoly::constant(p, kOne), HoloPoly(p, {}), HoloPoly(p, {}), p);
  IvpConfig cfg;
  cfg.params = p;
  cfg.domain = Rect{-1, -1, 1, 1};
  cfg.grid = grid_for(cfg.domain, 1.0 / 64);
  cfg.dt = 1e-3;
  cfg.t_end = 0.1;
  const IvpRun run = record("transport", cfg, rc, Z);
  const ComplexField& w = run.fields.back();
  double err = 0.0;
  for (std::size_t j = 0; j < w.grid.ny; ++j) {
    for (std::size_t i = 0; i < w.grid.nx; ++i) {
      err = std::max(err, dist(w(i, j), GC{-w.grid.y(j), w.grid.x(i) + 0.1}));
    }
  }
  OperatorCoeffs L{p};
  L.A = kOne;
  const HoloPoly s = series_solution(L, Z, 0.1, 12);
  double serr = 0.0;
  for (std::size_t j = 0; j < w.grid.ny; ++j) {
    for (std::size_t i = 0; i < w.grid.nx; ++i) {
      serr = std::max(serr, dist(eval(s, w.grid.x(i), w.grid.y(j)), GC{-w.grid.y(j), w.grid.x(i) + 0.1}));
    }
  }
  return {err <= 1e-8 && serr <= 1e-12, fmt("solver error %.2e, series error %.2e", err, serr)};
}

Outcome holomorphy_preservation() {
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  const HoloPoly A = add_poly(HoloPoly::constant(p, kOne), scale(0.25, Z));
  const HoloPoly E = scale(GC{0.2, 0.1}, Z);
  const HoloPoly G = HoloPoly::constant(p, GC{0.1, -0.2});
  const HoloPoly w0 = mul_poly(mul_poly(Z, Z), Z);
  const double hs[] = {1.0 / 16, 1.0 / 32, 1.0 / 64};
  double base[3], pert[3];
  for (int r = 0; r < 3; ++r) {
    IvpConfig cfg;
    cfg.params = p;
    cfg.domain = Rect{-1, -1, 1, 1};
    cfg.grid = grid_for(cfg.domain, hs[r]);
    cfg.dt = 1e-3;
    cfg.t_end = 0.5;
    cfg.exhaustion_levels = 5;
    cfg.keep_fields = false;
    FreeCoeffs free;
    free.a11 = field(cfg.grid, [](double x, double y) { return 0.3 * std::sin(x + y); });
    free.a12 = field(cfg.grid, [](double x, double) { return 0.2 * std::cos(x); });
    free.b11 = 0.1 * BiPoly::x() * BiPoly::y();
    free.b12 = field(cfg.grid, [](double, double y) { return 0.2 * std::sin(y); });
    RealCoeffs rc = synthesize(free, A, E, G, p);
    base[r] = record(fmt("associated h=1/%d", 16 << r), cfg, rc, w0).cr_residual.back().back();
    for (double& v : std::get<ScalarField>(rc.b12).values) v += 0.5;
    pert[r] = record(fmt("perturbed h=1/%d", 16 << r), cfg, rc, w0).cr_residual.back().back();
  }
  const double o1 = std::log2(base[0] / base[1]), o2 = std::log2(base[1] / base[2]);
  const double ratio = std::min({pert[0] / base[0], pert[1] / base[1], pert[2] / base[2]});
  const bool ok = o1 >= 1.9 && o2 >= 1.9 && ratio >= 10.0;
  return {ok, fmt("deepest-level drift %.2e/%.2e/%.2e, orders %.2f %.2f; perturbed/associated >= %.0fx",
                  base[0], base[1], base[2], o1, o2, ratio)};
}

Outcome exhaustion_monotonicity() {
  // A disk run with a transport perturbation, so that crossings occur.
  const AlgebraParams p{2, 1};
  const HoloPoly Z = HoloPoly::generator(p);
  IvpConfig cfg;
  cfg.params = p;
  cfg.domain = Disk{0, 0, 1};
  cfg.grid = grid_for(cfg.domain, 1.0 / 32);
  cfg.dt = 2e-3;
  cfg.t_end = 0.5;
  cfg.exhaustion_levels = 5;
  cfg.keep_fields = false;
  RealCoeffs rc = synthesize(FreeCoeffs{}, HoloPoly::constant(p, kOne), HoloPoly(p, {}), HoloPoly(p, {}), p);
  rc.b12 = 0.5;
  (void)record("perturbed transport on disk", cfg, rc, mul_poly(mul_poly(Z, Z), Z));

  std::size_t crossings = 0;
  std::string failed;
  for (const Recorded& r : g_runs) {
    const ConicalTable t = conical_diagnostic(r.run, r.cfg);
    for (const ConicalRow& row : t.rows) crossings += row.crossing_time.has_value();
    if (!t.monotone) failed += (failed.empty() ? "" : ", ") + r.name;
  }
  return {failed.empty(), fmt("%zu runs, %zu level crossings, non-monotone: %s", g_runs.size(), crossings,
                              failed.empty() ? "none" : failed.c_str())};
}

Outcome weierstrass() {
  const AlgebraParams p{2, 1};
  std::vector<HoloPoly> sums;
  std::vector<GC> c;
  double fact = 1.0;
  for (int k = 0; k < 25; ++k) {
    if (k > 0) fact *= k;
    c.push_back({1.0 / fact, 0.0});
    sums.emplace_back(p, c);
  }
  WeierstrassOptions opt;
  opt.h = 1.0 / 128;
  const WeierstrassReport r = weierstrass_check(sums, Disk{0, 0, 0.5}, opt);
  const bool ok = r.geometric && r.decreasing && r.residual_fourth_order <= 1e-8;
  return {ok, fmt("max decay ratio %.3f, limit residual %.2e (fourth order), %.2e (second order)", r.max_ratio,
                  r.residual_fourth_order, r.residual_second_order)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {1, "determinant identity", 1.0, determinant},
      {2, "classical reduction", 0.0, classical_reduction},
      {3, "ihat squares to -1", 0.0, ihat_square},
      {4, "norm multiplicativity", 0.0, norm_multiplicativity},
      {5, "Cauchy reproduction", 5.0, cauchy_reproduction},
      {6, "association positive/negative", 0.0, association},
      {7, "real/complex round trip", 0.0, round_trip},
      {8, "IVP exactness", 10.0, ivp_exactness},
      {9, "holomorphy preservation", 0.0, holomorphy_preservation},
      {10, "exhaustion monotonicity", 0.0, exhaustion_monotonicity},
      {11, "Weierstrass check", 0.0, weierstrass},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0.0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += fmt("; over the %.0f s limit", c.limit_s);
    }
    failures += !o.pass;
    std::printf("[%s] %2d %-30s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
