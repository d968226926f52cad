#include "app/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "app/json_io.hpp"
#include "app/manifest.hpp"
#include "epcx/cauchy.hpp"
#include "epcx/error.hpp"
#include "epcx/estimates.hpp"
#include "epcx/ivp.hpp"
#include "epcx/operator.hpp"
#include "epcx/random.hpp"
#include "epcx/rewrite.hpp"
#include "epcx/stencil.hpp"

namespace epcx::app {

namespace {

namespace fs = std::filesystem;

constexpr const char* kPrng = "mt19937_64 seeded with the seed; uniform(lo, hi) = lo + (hi - lo) * (x >> 11) * 2^-53";

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Context {
  json config;
  AlgebraParams params;
  std::uint64_t seed = kDefaultSeed;
  fs::path out;
  std::ostream& log;
  json outputs = json::object();

  void emit(const std::string& name, const std::string& content) {
    write_file(out / name, content);
    outputs[name] = git_blob_sha1(content);
  }
  void emit(const std::string& name, const json& j) { emit(name, j.dump(2) + "\n"); }
};

// ---------------------------------------------------------------- verify

struct Suite {
  std::string name;
  std::string status;
  std::string detail;
};

Suite skipped(std::string name, const char* why) { return {std::move(name), "SKIPPED", why}; }

Suite judged(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? "PASS" : "FAIL", std::move(detail)};
}

GC draw(Rng& rng, double r = 2.0) { return {rng.uniform(-r, r), rng.uniform(-r, r)}; }

double gap(const GC& a, const GC& b) { return euclid(a - b); }

HoloPoly draw_holo(Rng& rng, const AlgebraParams& p, int degree, double r) {
  std::vector<GC> c(static_cast<std::size_t>(degree) + 1);
  for (GC& v : c) v = draw(rng, r);
  return HoloPoly(p, std::move(c));
}

GC draw_in_disk(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform()), t = 2.0 * std::numbers::pi * rng.uniform();
  return {r * std::cos(t), r * std::sin(t)};
}

constexpr int kDraws = 1000;

Suite ring_axioms(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  const double scale = std::pow(1.0 + std::abs(p.alpha) + std::abs(p.beta), 2);
  double worst = 0.0;
  for (int n = 0; n < kDraws; ++n) {
    const GC a = draw(rng), b = draw(rng), c = draw(rng);
    worst = std::max({worst, gap(mul(a, b, p), mul(b, a, p)) / scale,
                      gap(mul(mul(a, b, p), c, p), mul(a, mul(b, c, p), p)) / (scale * scale)});
  }
  return judged("commutativity/associativity", worst <= 1e-13, fmt("scaled defect %.2e", worst));
}

Suite inverses(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  int used = 0;
  for (int n = 0; n < kDraws; ++n) {
    const GC z = draw(rng);
    if (std::abs(quadratic_form(z, p)) < 1e-3 * (z.x * z.x + z.y * z.y)) continue;
    worst = std::max(worst, gap(mul(z, inv(z, p), p), kOne));
    ++used;
  }
  return judged("inverse", worst <= 1e-9, fmt("|z inv(z) - 1| <= %.2e over %d draws", worst, used));
}

Suite conjugation(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0, defect = 0.0;
  for (int n = 0; n < kDraws; ++n) {
    const GC a = draw(rng), b = draw(rng);
    const GC d = conj(mul(a, b, p)) - mul(conj(a), conj(b), p);
    defect = std::max(defect, euclid(d));
    worst = std::max(worst, gap(d, GC{0.0, 2.0 * p.beta * a.y * b.y}));
  }
  const std::string kind = p.beta == 0.0 ? "multiplicative" : fmt("not multiplicative, max defect %.3g", defect);
  return judged("conjugation", worst <= 1e-12 * (1.0 + std::abs(p.alpha) + std::abs(p.beta)),
                kind + fmt("; defect matches (0, 2 beta y1 y2) to %.2e", worst));
}

Suite ihat_square(const AlgebraParams& p) {
  const GC j = ihat(p);
  const double e = gap(mul(j, j, p), GC{-1.0, 0.0});
  return judged("ihat^2 = -1", e <= 1e-12, fmt("|ihat^2 + 1| = %.2e", e));
}

Suite norm_multiplicativity(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n < kDraws; ++n) {
    const GC a = draw(rng), b = draw(rng);
    const double rhs = norm_ab(a, p) * norm_ab(b, p);
    if (rhs > 0.0) worst = std::max(worst, std::abs(norm_ab(mul(a, b, p), p) - rhs) / rhs);
  }
  return judged("norm multiplicativity", worst <= 1e-12, fmt("relative defect %.2e", worst));
}

Suite norm_equivalence(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  const NormConstants k = equivalence_constants(p);
  bool ok = true;
  for (int n = 0; n < kDraws; ++n) {
    const GC z = draw(rng);
    const double nz = norm_ab(z, p), e = euclid(z);
    ok = ok && k.k1 * nz <= e * (1 + 1e-12) && e <= k.k2 * nz * (1 + 1e-12);
  }
  return judged("norm equivalence", ok, fmt("K1 = %.6f, K2 = %.6f", k.k1, k.k2));
}

Suite determinant(const AlgebraParams& p) {
  const double d = det_check(p);
  return judged("determinant", std::abs(d - 1.0) <= 1e-9,
                fmt("det = %.10g, det alpha^4 / -256 = %.15f", coefficient_determinant(p), d));
}

Suite round_trip(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  const GridSpec g{-1.0, -1.0, 9, 9, 0.25};
  const double tol = 1e-10 * std::max({1.0, 1.0 / std::abs(p.alpha), std::abs(p.beta / p.alpha)});
  double worst = 0.0;
  for (int n = 0; n < 110; ++n) {
    RealCoeffs rc;
    for (Scalar* s : rc.members()) {
      if (n < 100) {
        *s = rng.uniform(-2.0, 2.0);
      } else {
        *s = BiPoly(rng.uniform(-2, 2)) + rng.uniform(-2, 2) * BiPoly::x() * BiPoly::y();
      }
    }
    worst = std::max(worst, max_difference(rc, complex_to_real(real_to_complex(rc, p), p), g));
  }
  return judged("real/complex round trip", worst <= tol, fmt("max error %.2e over 110 sets", worst));
}

Suite cauchy_reproduction(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  const HoloPoly Z = HoloPoly::generator(p);
  const std::vector<HoloPoly> fs{HoloPoly::constant(p, kOne), Z, scale(-1.0, mul_poly(Z, Z)),
                                 scale(GC{-p.beta, -1.0}, Z)};
  const Contour c{0.0, 0.0, 1.0, 512};
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const GC zeta = draw_in_disk(rng, 0.8);
    for (const HoloPoly& f : fs) worst = std::max(worst, gap(cauchy_eval(f, c, zeta), eval(f, zeta.x, zeta.y)));
  }
  return judged("Cauchy reproduction", worst <= 1e-6, fmt("max error %.2e, 512 nodes, 20 points", worst));
}

Suite interior_estimates(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  const HoloPoly Z = HoloPoly::generator(p);
  const std::vector<HoloPoly> fs{scale(-1.0, mul_poly(Z, Z)), mul_poly(Z, mul_poly(Z, Z))};
  double worst = 0.0;
  bool ok = true;
  for (int n = 0; n < 50; ++n) {
    const GC zeta = draw_in_disk(rng, 0.95);
    for (const HoloPoly& f : fs) {
      const InteriorEstimate e = interior_estimate_check(f, Disk{0.0, 0.0, 1.0}, zeta, 128);
      ok = ok && e.holds;
      worst = std::max(worst, e.lhs / e.rhs);
    }
  }
  return judged("interior estimates", ok, fmt("max lhs/rhs %.3f over 100 checks", worst));
}

Suite association(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  const double h = 1.0 / 32;
  const GridSpec g{-1.0, -1.0, 65, 65, h};
  double worst = 0.0;
  bool associated = true;
  for (int n = 0; n < 5; ++n) {
    FreeCoeffs free;
    for (Scalar* s : {&free.a11, &free.a12, &free.b11, &free.b12}) {
      *s = BiPoly(rng.uniform(-1, 1)) + rng.uniform(-1, 1) * BiPoly::x() * BiPoly::y();
    }
    const RealCoeffs rc = synthesize(free, draw_holo(rng, p, 1, 0.5), draw_holo(rng, p, 1, 0.5),
                                     draw_holo(rng, p, 0, 0.5), p);
    const OperatorCoeffs L = real_to_complex(rc, p);
    associated = associated && sontutschke_verdict(L, g).associated();
    worst = std::max(worst, association_residual(L, {}, g));
  }
  OperatorCoeffs bad{p};
  bad.B = kOne;
  const bool caught = !sontutschke_verdict(bad, g).associated();
  return judged("association", associated && caught && worst <= 5.0 * h * h,
                fmt("max residual %.2e (5h^2 = %.2e); B = 1 %s", worst, 5.0 * h * h,
                    caught ? "rejected" : "NOT rejected"));
}

Suite product_rule(const AlgebraParams& p, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const HoloPoly f = draw_holo(rng, p, 5, 1.0), g = draw_holo(rng, p, 4, 1.0);
    const HoloPoly lhs = derive(mul_poly(f, g));
    const HoloPoly rhs = add_poly(mul_poly(derive(f), g), mul_poly(f, derive(g)));
    for (int k = 0; k <= std::max(lhs.degree(), rhs.degree()); ++k) worst = std::max(worst, gap(lhs.coeff(k), rhs.coeff(k)));
  }
  const double scale = std::pow(1.0 + std::abs(p.alpha) + std::abs(p.beta), 5);
  return judged("product rule", worst <= 1e-11 * scale, fmt("max coefficient defect %.2e", worst));
}

bool run_verify(Context& ctx) {
  check_keys(ctx.config, "config", {"mode", "params", "seed"}, {"params"});
  const AlgebraParams& p = ctx.params;
  const std::uint64_t s = ctx.seed;
  const char* not_elliptic = "needs elliptic parameters (4 alpha - beta^2 > 0)";
  const char* alpha_zero = "needs alpha != 0";
  const char* inadmissible = "needs alpha beta^2 - 4 alpha^2 != 0";

  std::vector<Suite> suites;
  auto guarded = [&](const std::string& name, const std::function<Suite()>& fn) {
    try {
      suites.push_back(fn());
    } catch (const Error& e) {
      suites.push_back({name, "FAIL", std::string(to_string(e.code())) + ": " + e.what()});
    }
  };
  guarded("commutativity/associativity", [&] { return ring_axioms(p, s); });
  guarded("inverse", [&] { return inverses(p, s); });
  guarded("conjugation", [&] { return conjugation(p, s); });
  guarded("product rule", [&] { return product_rule(p, s); });
  if (p.elliptic()) {
    guarded("ihat^2 = -1", [&] { return ihat_square(p); });
    guarded("norm multiplicativity", [&] { return norm_multiplicativity(p, s); });
    guarded("norm equivalence", [&] { return norm_equivalence(p, s); });
  } else {
    for (const char* n : {"ihat^2 = -1", "norm multiplicativity", "norm equivalence"}) suites.push_back(skipped(n, not_elliptic));
  }
  if (p.alpha != 0.0) {
    guarded("determinant", [&] { return determinant(p); });
    guarded("real/complex round trip", [&] { return round_trip(p, s); });
  } else {
    for (const char* n : {"determinant", "real/complex round trip"}) suites.push_back(skipped(n, alpha_zero));
  }
  if (p.elliptic()) {
    guarded("Cauchy reproduction", [&] { return cauchy_reproduction(p, s); });
    guarded("interior estimates", [&] { return interior_estimates(p, s); });
  } else {
    for (const char* n : {"Cauchy reproduction", "interior estimates"}) suites.push_back(skipped(n, not_elliptic));
  }
  if (p.lemma1_admissible()) {
    guarded("association", [&] { return association(p, s); });
  } else {
    suites.push_back(skipped("association", inadmissible));
  }

  bool ok = true;
  json rows = json::array();
  ctx.log << fmt("verify alpha=%g beta=%g seed=%llu\n", p.alpha, p.beta, static_cast<unsigned long long>(s));
  for (const Suite& suite : suites) {
    ok = ok && suite.status != "FAIL";
    rows.push_back({{"suite", suite.name}, {"status", suite.status}, {"detail", suite.detail}});
    ctx.log << fmt("  %-28s %-8s %s\n", suite.name.c_str(), suite.status.c_str(), suite.detail.c_str());
  }
  ctx.emit("verify.json", json{{"params", to_json(p)}, {"seed", s}, {"passed", ok}, {"suites", rows}});
  return ok;
}

// ------------------------------------------------------------ synthesize

bool run_synthesize(Context& ctx) {
  check_keys(ctx.config, "config", {"mode", "params", "seed", "free", "A", "E", "G"}, {"params"});
  const AlgebraParams& p = ctx.params;
  const json& c = ctx.config;
  const FreeCoeffs free = c.contains("free") ? parse_free(c["free"]) : FreeCoeffs{};
  auto holo = [&](const char* key) { return c.contains(key) ? parse_holo(c[key], p, key) : HoloPoly(p, {}); };
  const RealCoeffs rc = synthesize(free, holo("A"), holo("E"), holo("G"), p);
  const json out{{"params", to_json(p)}, {"coefficients", to_json(rc)}};
  ctx.log << out.dump(2) << "\n";
  ctx.emit("synthesize.json", out);
  return true;
}

// ------------------------------------------------------ check-associated

OperatorCoeffs operator_from(const json& c, const AlgebraParams& p) {
  const bool has_op = c.contains("operator"), has_real = c.contains("coefficients");
  if (has_op == has_real) throw ConfigError("config: expected exactly one of \"operator\", \"coefficients\"");
  if (has_op) return parse_operator(c["operator"], p);
  return real_to_complex(parse_real(c["coefficients"]), p);
}

double positive(const json& c, const char* key) {
  const double v = get_number(c, key, "config");
  if (!(v > 0.0)) throw ConfigError(std::string("config.") + key + ": must be positive");
  return v;
}

bool run_check_associated(Context& ctx) {
  const json& c = ctx.config;
  check_keys(c, "config", {"mode", "params", "seed", "operator", "coefficients", "domain", "h", "tol", "sampled_tol"},
             {"params", "domain", "h"});
  const AlgebraParams& p = ctx.params;
  const OperatorCoeffs L = operator_from(c, p);
  const GridSpec g = grid_for(parse_domain(c["domain"]), positive(c, "h"));
  VerdictOptions opt;
  if (c.contains("tol")) opt.tol = positive(c, "tol");
  if (c.contains("sampled_tol")) opt.sampled_tol = positive(c, "sampled_tol");
  const Verdict v = sontutschke_verdict(L, g, opt);
  const double residual = association_residual(L, {}, g);

  static constexpr const char* kMeasured[] = {"sup_B", "sup_F", "dzbar_A", "dzbar_E", "dzbar_G"};
  json measured = json::object();
  for (std::size_t k = 0; k < 5; ++k) measured[kMeasured[k]] = v.measured[k];
  json violations = json::array();
  for (const Violation& x : v.violations) {
    violations.push_back({{"condition", label(x.condition)}, {"magnitude", x.magnitude}, {"tolerance", x.tolerance}});
  }
  ctx.emit("verdict.json", json{{"params", to_json(p)},
                                {"h", g.h},
                                {"associated", v.associated()},
                                {"measured", measured},
                                {"violations", violations},
                                {"association_residual", residual}});
  ctx.log << (v.associated() ? "associated" : "not associated") << fmt(" (association residual %.3e, h = %g)\n", residual, g.h);
  for (const Violation& x : v.violations) {
    ctx.log << fmt("  %-22s %.3e > %.1e\n", label(x.condition).c_str(), x.magnitude, x.tolerance);
  }
  return v.associated();
}

// ----------------------------------------------------------------- solve

json level_json(const ExhaustionLevel& l) { return {{"index", l.index}, {"depth", l.depth}, {"s", l.s}}; }

bool run_solve(Context& ctx) {
  const json& c = ctx.config;
  check_keys(c, "config",
             {"mode", "params", "seed", "domain", "h", "exhaustion_levels", "dt", "t_end", "method", "series_order",
              "cfl", "w0", "coefficients", "synthesize"},
             {"params", "domain", "h", "dt", "t_end", "w0"});
  const AlgebraParams& p = ctx.params;
  IvpConfig cfg;
  cfg.params = p;
  cfg.domain = parse_domain(c["domain"]);
  cfg.grid = grid_for(cfg.domain, positive(c, "h"));
  cfg.dt = positive(c, "dt");
  cfg.t_end = positive(c, "t_end");
  cfg.keep_fields = false;
  if (c.contains("exhaustion_levels")) {
    const long long n = get_integer(c, "exhaustion_levels", "config");
    if (n < 2) throw ConfigError("config.exhaustion_levels: must be at least 2");
    cfg.exhaustion_levels = static_cast<std::size_t>(n);
  }
  if (c.contains("method")) {
    const json& m = c["method"];
    if (m == "rk4") {
      cfg.method = Integrator::rk4;
    } else if (m == "series") {
      cfg.method = Integrator::series;
    } else {
      throw ConfigError("config.method: expected \"rk4\" or \"series\"");
    }
  }
  if (c.contains("series_order")) {
    const long long n = get_integer(c, "series_order", "config");
    if (n < 0 || n > 64) throw ConfigError("config.series_order: expected 0..64");
    cfg.series_order = static_cast<int>(n);
  }
  if (c.contains("cfl")) cfg.cfl = positive(c, "cfl");

  const bool has_rc = c.contains("coefficients"), has_syn = c.contains("synthesize");
  if (has_rc == has_syn) throw ConfigError("config: expected exactly one of \"coefficients\", \"synthesize\"");
  RealCoeffs rc;
  if (has_rc) {
    rc = parse_real(c["coefficients"]);
  } else {
    const json& s = c["synthesize"];
    check_keys(s, "synthesize", {"free", "A", "E", "G"});
    auto holo = [&](const char* key) { return s.contains(key) ? parse_holo(s[key], p, key) : HoloPoly(p, {}); };
    rc = synthesize(s.contains("free") ? parse_free(s["free"]) : FreeCoeffs{}, holo("A"), holo("E"), holo("G"), p);
  }
  const HoloPoly w0 = parse_holo(c["w0"], p, "w0");

  const IvpRun run = solve(cfg, rc, w0);
  std::ostringstream csv;
  write_csv(csv, run);
  ctx.emit("ivp.csv", csv.str());

  const DriftReport drift = holomorphy_drift(run);
  const ConicalTable table = conical_diagnostic(run, cfg);
  json levels = json::array();
  for (const ConicalRow& row : table.rows) {
    json l = level_json(row.level);
    l["crossing_time"] = row.crossing_time ? json(*row.crossing_time) : json(nullptr);
    levels.push_back(l);
  }
  ctx.emit("diagnostics.json",
           json{{"grid", {{"x0", cfg.grid.x0}, {"y0", cfg.grid.y0}, {"nx", cfg.grid.nx}, {"ny", cfg.grid.ny}, {"h", cfg.grid.h}}},
                {"boundary_policy", fmt("one-sided stencils at the grid edge; residuals exclude a %zu-cell collar", kCollar)},
                {"drift", {{"max_residual", drift.max_residual}, {"growth_rate", drift.growth_rate}}},
                {"conical", {{"threshold", table.threshold}, {"monotone", table.monotone}, {"levels", levels}}}});

  ctx.log << fmt("solve: %zu output times, %zu levels, h = %g, dt = %g\n", run.times.size(), run.levels.size(),
                 cfg.grid.h, cfg.dt);
  ctx.log << fmt("  %-6s %-10s %-14s %-14s %s\n", "level", "s", "max residual", "growth rate", "crossing");
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const ConicalRow& row = table.rows[k];
    ctx.log << fmt("  %-6zu %-10.4g %-14.4e %-14.4e %s\n", row.level.index, row.level.s, drift.max_residual[k],
                   drift.growth_rate[k], row.crossing_time ? fmt("%g", *row.crossing_time).c_str() : "never");
  }
  ctx.log << fmt("  conical monotonicity (threshold %.3e): %s\n", table.threshold, table.monotone ? "PASS" : "FAIL");
  return table.monotone;
}

// ----------------------------------------------------------- cauchy-demo

bool run_cauchy_demo(Context& ctx) {
  const json& c = ctx.config;
  check_keys(c, "config", {"mode", "params", "seed", "function", "contour", "points", "random_points", "nodes"},
             {"params", "function"});
  const AlgebraParams& p = ctx.params;
  require_elliptic(p);
  const HoloPoly f = parse_holo(c["function"], p, "function");
  Contour contour{0.0, 0.0, 1.0, 512};
  if (c.contains("contour")) {
    const json& k = c["contour"];
    check_keys(k, "contour", {"center", "radius"});
    if (k.contains("center")) {
      const GC z = parse_gc(k["center"], "contour.center");
      contour.cx = z.x;
      contour.cy = z.y;
    }
    if (k.contains("radius")) contour.radius = positive(k, "radius");
  }
  std::vector<GC> points;
  if (c.contains("points")) {
    if (!c["points"].is_array()) throw ConfigError("config.points: expected an array");
    for (const json& z : c["points"]) points.push_back(parse_gc(z, "points"));
  } else {
    long long n = 20;
    if (c.contains("random_points")) n = get_integer(c, "random_points", "config");
    if (n < 1) throw ConfigError("config.random_points: must be positive");
    Rng rng(ctx.seed);
    for (long long k = 0; k < n; ++k) {
      const GC z = draw_in_disk(rng, 0.8 * contour.radius);
      points.push_back({contour.cx + z.x, contour.cy + z.y});
    }
  }
  std::vector<std::size_t> nodes{16, 32, 64, 128, 256, 512};
  if (c.contains("nodes")) {
    nodes.clear();
    if (!c["nodes"].is_array()) throw ConfigError("config.nodes: expected an array");
    for (const json& n : c["nodes"]) {
      if (!n.is_number_unsigned() || n.get<std::size_t>() < kMinContourNodes) {
        throw ConfigError("config.nodes: entries must be integers >= 16");
      }
      nodes.push_back(n.get<std::size_t>());
    }
    if (nodes.empty()) throw ConfigError("config.nodes: must not be empty");
  }

  json rows = json::array();
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity(), last = 0.0;
  ctx.log << fmt("cauchy-demo: %zu points, contour center (%g, %g) radius %g\n", points.size(), contour.cx,
                 contour.cy, contour.radius);
  ctx.log << fmt("  %-8s %-14s %s\n", "nodes", "max error", "max derivative error");
  for (std::size_t n : nodes) {
    Contour k = contour;
    k.n_nodes = n;
    double err = 0.0, derr = 0.0;
    for (const GC& z : points) {
      err = std::max(err, euclid(cauchy_eval(f, k, z) - eval(f, z.x, z.y)));
      derr = std::max(derr, euclid(derivative_via_contour(f, k, z) - eval(derive(f), z.x, z.y)));
    }
    if (prev > 1e-13 && err > prev) monotone = false;
    prev = last = err;
    rows.push_back({{"nodes", n}, {"max_error", err}, {"max_derivative_error", derr}});
    ctx.log << fmt("  %-8zu %-14.4e %.4e\n", n, err, derr);
  }
  const bool ok = monotone && last <= 1e-6;
  ctx.log << fmt("  monotone under refinement: %s, final error <= 1e-6: %s\n", monotone ? "yes" : "no",
                 last <= 1e-6 ? "yes" : "no");
  ctx.emit("cauchy_demo.json", json{{"params", to_json(p)}, {"rows", rows}, {"monotone", monotone}, {"passed", ok}});
  return ok;
}

int code_for(Errc e) {
  switch (e) {
    case Errc::non_finite_state:
    case Errc::solve_failure: return kCheckFailed;
    default: return kConfigInvalid;
  }
}

}  // namespace

std::optional<Mode> parse_mode(std::string_view s) {
  for (Mode m : {Mode::verify, Mode::synthesize, Mode::check_associated, Mode::solve, Mode::cauchy_demo}) {
    if (mode_name(m) == s) return m;
  }
  return std::nullopt;
}

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::verify: return "verify";
    case Mode::synthesize: return "synthesize";
    case Mode::check_associated: return "check-associated";
    case Mode::solve: return "solve";
    case Mode::cauchy_demo: return "cauchy-demo";
  }
  return "";
}

int run(const RunOptions& options, std::ostream& log, std::ostream& err) {
  try {
    json config;
    try {
      config = json::parse(read_file(options.config));
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!config.is_object()) throw ConfigError("config: expected an object");
    if (config.contains("mode") && config["mode"] != mode_name(options.mode)) {
      throw ConfigError("config.mode does not match the command");
    }
    if (options.params) config["params"] = to_json(*options.params);
    if (!config.contains("params")) throw ConfigError("config: missing key \"params\"");

    Context ctx{config, parse_params(config["params"]), kDefaultSeed, options.out, log};
    if (config.contains("seed")) {
      if (!config["seed"].is_number_unsigned()) throw ConfigError("config.seed: expected a non-negative integer");
      ctx.seed = config["seed"].get<std::uint64_t>();
    }
    if (options.seed) ctx.seed = *options.seed;
    ctx.config["seed"] = ctx.seed;

    bool ok = false;
    switch (options.mode) {
      case Mode::verify: ok = run_verify(ctx); break;
      case Mode::synthesize: ok = run_synthesize(ctx); break;
      case Mode::check_associated: ok = run_check_associated(ctx); break;
      case Mode::solve: ok = run_solve(ctx); break;
      case Mode::cauchy_demo: ok = run_cauchy_demo(ctx); break;
    }
    const std::string effective = ctx.config.dump(2) + "\n";
    ctx.emit("manifest.json", json{{"tool", "epcx"},
                                   {"version", EPCX_VERSION},
                                   {"mode", mode_name(options.mode)},
                                   {"seed", ctx.seed},
                                   {"prng", kPrng},
                                   {"config", ctx.config},
                                   {"input_sha1", git_blob_sha1(effective)},
                                   {"outputs", ctx.outputs},
                                   {"passed", ok}});
    return ok ? kOk : kCheckFailed;
  } catch (const ConfigError& e) {
    err << "ConfigInvalid: " << e.what() << "\n";
    return kConfigInvalid;
  } catch (const IoError& e) {
    err << "IoError: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    const int code = code_for(e.code());
    err << (code == kConfigInvalid ? "ConfigInvalid" : "CheckFailed") << ": " << to_string(e.code()) << ": "
        << e.what() << "\n";
    return code;
  } catch (const json::exception& e) {
    err << "ConfigInvalid: " << e.what() << "\n";
    return kConfigInvalid;
  }
}

}  // namespace epcx::app
