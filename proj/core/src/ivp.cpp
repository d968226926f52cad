#include "epcx/ivp.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "epcx/error.hpp"
#include "epcx/parallel.hpp"
#include "epcx/stencil.hpp"

namespace epcx {

namespace {

constexpr double kBlowUp = 1e12;

// Holomorphic polynomial form of a coefficient, if it has one.
std::optional<HoloPoly> as_holo(const Coefficient& c, const AlgebraParams& p) {
  if (const auto* v = std::get_if<GC>(&c)) return HoloPoly::constant(p, *v);
  if (const auto* f = std::get_if<HoloPoly>(&c)) {
    if (!(f->params() == p)) throw Error(Errc::params_mismatch, "coefficient belongs to another algebra");
    return *f;
  }
  if (const auto* f = std::get_if<PolyPair>(&c)) return lift_holomorphic(*f, p);
  return std::nullopt;
}

constexpr double kVanishTol = 1e-12;

bool vanishes(const Coefficient& c) {
  if (const auto* v = std::get_if<GC>(&c)) return euclid(*v) <= kVanishTol;
  if (const auto* f = std::get_if<HoloPoly>(&c)) {
    return std::all_of(f->coeffs().begin(), f->coeffs().end(),
                       [](const GC& v) { return euclid(v) <= kVanishTol; });
  }
  if (const auto* f = std::get_if<PolyPair>(&c)) return f->max_abs_coeff() <= kVanishTol;
  const auto& f = std::get<ComplexField>(c);
  return max_norm(f) <= kVanishTol;
}

// w_0 = w0, w_1 = L w0, w_{n+1} = A w_n' + E w_n.
std::vector<HoloPoly> series_terms(const OperatorCoeffs& L, const HoloPoly& w0, int order) {
  const AlgebraParams& p = L.params;
  if (!(w0.params() == p)) throw Error(Errc::params_mismatch, "initial value belongs to another algebra");
  if (!vanishes(L.B) || !vanishes(L.F)) {
    throw Error(Errc::not_associated, "series solution needs B = F = 0");
  }
  const auto A = as_holo(L.A, p);
  const auto E = as_holo(L.E, p);
  const auto G = as_holo(L.G, p);
  if (!A || !E || !G) {
    throw Error(Errc::not_associated, "series solution needs holomorphic polynomial A, E, G");
  }
  std::vector<HoloPoly> terms{w0};
  for (int n = 1; n <= order; ++n) {
    const HoloPoly& prev = terms.back();
    HoloPoly next = add_poly(mul_poly(*A, derive(prev)), mul_poly(*E, prev));
    if (n == 1) next = add_poly(next, *G);
    terms.push_back(std::move(next));
  }
  return terms;
}

HoloPoly sum_terms(const std::vector<HoloPoly>& terms, double t) {
  HoloPoly out = terms.front();
  double weight = 1.0;
  for (std::size_t n = 1; n < terms.size(); ++n) {
    weight *= t / static_cast<double>(n);
    out = add_poly(out, scale(weight, terms[n]));
  }
  return out;
}

std::optional<std::vector<HoloPoly>> try_series(const IvpConfig& cfg, const RealCoeffs& rc,
                                                const HoloPoly& w0) {
  if (cfg.params.alpha == 0.0) return std::nullopt;
  for (const Scalar* s : rc.members()) {
    if (std::holds_alternative<ScalarField>(*s)) return std::nullopt;
  }
  try {
    return series_terms(real_to_complex(rc, cfg.params), w0, cfg.series_order);
  } catch (const Error& e) {
    if (e.code() == Errc::not_associated || e.code() == Errc::degree_overflow) return std::nullopt;
    throw;
  }
}

struct Coeffs {
  std::array<ScalarField, 14> f;
  const ScalarField& operator[](std::size_t k) const { return f[k]; }
};

std::string format(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, r.ptr};
}

}  // namespace

std::vector<ExhaustionLevel> exhaustion(const Domain& d, std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_argument, "at least two exhaustion levels are needed");
  const double r = inradius(d);
  std::vector<ExhaustionLevel> levels;
  for (std::size_t k = 0; k < n; ++k) {
    const double depth = r * static_cast<double>(k) / static_cast<double>(n);
    levels.push_back({k, depth, r - depth});
  }
  return levels;
}

std::vector<std::size_t> level_nodes(const Domain& d, const GridSpec& g, const ExhaustionLevel& level) {
  std::vector<std::size_t> nodes;
  if (g.nx <= 2 * kCollar || g.ny <= 2 * kCollar) return nodes;
  for (std::size_t j = kCollar; j < g.ny - kCollar; ++j) {
    for (std::size_t i = kCollar; i < g.nx - kCollar; ++i) {
      if (distance_to_boundary(d, g.x(i), g.y(j)) >= level.depth - 1e-12) nodes.push_back(g.index(i, j));
    }
  }
  return nodes;
}

HoloPoly series_solution(const OperatorCoeffs& L, const HoloPoly& w0, double t, int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "series order must be non-negative");
  return sum_terms(series_terms(L, w0, order), t);
}

IvpRun solve(const IvpConfig& cfg, const RealCoeffs& rc, const HoloPoly& w0) {
  const GridSpec& g = cfg.grid;
  require_grid(g);
  if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0)) throw Error(Errc::invalid_argument, "dt and t_end must be positive");
  if (!(w0.params() == cfg.params)) throw Error(Errc::params_mismatch, "initial value belongs to another algebra");

  IvpRun run;
  run.h = g.h;
  run.levels = exhaustion(cfg.domain, cfg.exhaustion_levels);
  std::vector<std::vector<std::size_t>> nodes;
  for (const auto& level : run.levels) nodes.push_back(level_nodes(cfg.domain, g, level));

  Coeffs co;
  const auto members = rc.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    co.f[k] = lower(*members[k], g);
    for (double v : co.f[k].values) {
      if (!std::isfinite(v)) throw Error(Errc::invalid_argument, "coefficients must be finite on the grid");
    }
  }
  // members(): a11 a12 a21 a22 b11 b12 b21 b22 c1 c2 c3 d1 d2 d3
  double speed = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    for (double v : co[k].values) speed = std::max(speed, std::abs(v));
  }
  if (speed > 0.0 && cfg.dt > cfg.cfl * g.h / speed * (1.0 + 1e-12)) {
    throw Error(Errc::cfl_violation, "dt exceeds " + format(cfg.cfl * g.h / speed));
  }

  const auto series = try_series(cfg, rc, w0);
  if (cfg.method == Integrator::series && !series) {
    throw Error(Errc::not_associated, "series integration needs an associated polynomial system");
  }

  const auto steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
  if (steps == 0) throw Error(Errc::invalid_argument, "t_end is shorter than one step");
  const auto cadence = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(cfg.t_end / (100.0 * cfg.dt))));

  auto record = [&](double t, const ComplexField& w) {
    const ComplexField r = d_zbar(w);
    std::optional<ComplexField> ref;
    if (series) ref = to_field(sum_terms(*series, t), g);
    std::vector<double> res, sup;
    std::vector<std::optional<double>> err;
    for (const auto& level : nodes) {
      double rm = 0.0, sm = 0.0, em = 0.0;
      for (std::size_t k : level) {
        rm = std::max(rm, euclid(r.values[k]));
        sm = std::max(sm, euclid(w.values[k]));
        if (ref) em = std::max(em, euclid(w.values[k] - ref->values[k]));
      }
      res.push_back(rm);
      sup.push_back(sm);
      err.push_back(ref ? std::optional<double>(em) : std::nullopt);
    }
    run.times.push_back(t);
    run.cr_residual.push_back(std::move(res));
    run.sup_norm_w.push_back(std::move(sup));
    run.err_vs_series.push_back(std::move(err));
    if (cfg.keep_fields) run.fields.push_back(w);
  };

  if (cfg.method == Integrator::series) {
    for (std::size_t n = 0; n <= steps; ++n) {
      if (n % cadence != 0 && n != steps) continue;
      const double t = static_cast<double>(n) * cfg.dt;
      record(t, to_field(sum_terms(*series, t), g));
    }
    return run;
  }

  const std::size_t size = g.size();
  ComplexField w = to_field(w0, g);
  ScalarField u(g), v(g);
  for (std::size_t k = 0; k < size; ++k) {
    u.values[k] = w.values[k].x;
    v.values[k] = w.values[k].y;
  }

  auto rhs = [&](const ScalarField& uu, const ScalarField& vv, ScalarField& du, ScalarField& dv) {
    const ScalarField ux = partial_x(uu), uy = partial_y(uu), vx = partial_x(vv), vy = partial_y(vv);
    parallel_for(
        g.ny,
        [&](std::size_t j) {
          for (std::size_t i = 0; i < g.nx; ++i) {
            const std::size_t k = g.index(i, j);
            du.values[k] = co[0].values[k] * ux.values[k] + co[1].values[k] * uy.values[k] +
                           co[2].values[k] * vx.values[k] + co[3].values[k] * vy.values[k] +
                           co[8].values[k] * uu.values[k] + co[9].values[k] * vv.values[k] +
                           co[10].values[k];
            dv.values[k] = co[4].values[k] * ux.values[k] + co[5].values[k] * uy.values[k] +
                           co[6].values[k] * vx.values[k] + co[7].values[k] * vy.values[k] +
                           co[11].values[k] * uu.values[k] + co[12].values[k] * vv.values[k] +
                           co[13].values[k];
          }
        },
        8);
  };

  auto axpy = [&](const ScalarField& x, double a, const ScalarField& y, ScalarField& out) {
    for (std::size_t k = 0; k < size; ++k) out.values[k] = x.values[k] + a * y.values[k];
  };

  record(0.0, w);
  ScalarField k1u(g), k1v(g), k2u(g), k2v(g), k3u(g), k3v(g), k4u(g), k4v(g), tu(g), tv(g);
  const double dt = cfg.dt;
  for (std::size_t n = 1; n <= steps; ++n) {
    rhs(u, v, k1u, k1v);
    axpy(u, 0.5 * dt, k1u, tu);
    axpy(v, 0.5 * dt, k1v, tv);
    rhs(tu, tv, k2u, k2v);
    axpy(u, 0.5 * dt, k2u, tu);
    axpy(v, 0.5 * dt, k2v, tv);
    rhs(tu, tv, k3u, k3v);
    axpy(u, dt, k3u, tu);
    axpy(v, dt, k3v, tv);
    rhs(tu, tv, k4u, k4v);
    for (std::size_t k = 0; k < size; ++k) {
      u.values[k] += dt / 6.0 * (k1u.values[k] + 2.0 * k2u.values[k] + 2.0 * k3u.values[k] + k4u.values[k]);
      v.values[k] += dt / 6.0 * (k1v.values[k] + 2.0 * k2v.values[k] + 2.0 * k3v.values[k] + k4v.values[k]);
      if (!(std::hypot(u.values[k], v.values[k]) <= kBlowUp)) {
        throw Error(Errc::non_finite_state, "solution blew up at t = " + format(static_cast<double>(n) * dt));
      }
    }
    if (n % cadence == 0 || n == steps) {
      for (std::size_t k = 0; k < size; ++k) w.values[k] = {u.values[k], v.values[k]};
      record(static_cast<double>(n) * dt, w);
    }
  }
  return run;
}

DriftReport holomorphy_drift(const IvpRun& run) {
  DriftReport rep;
  if (run.times.empty()) return rep;
  const std::size_t levels = run.cr_residual.front().size();
  const double span = run.times.back() - run.times.front();
  for (std::size_t l = 0; l < levels; ++l) {
    double m = 0.0;
    for (const auto& row : run.cr_residual) m = std::max(m, row[l]);
    rep.max_residual.push_back(m);
    rep.growth_rate.push_back(
        span > 0.0 ? (run.cr_residual.back()[l] - run.cr_residual.front()[l]) / span : 0.0);
  }
  return rep;
}

ConicalTable conical_diagnostic(const IvpRun& run, const IvpConfig& cfg) {
  ConicalTable table;
  if (run.times.empty()) return table;
  const double h = cfg.grid.h;
  table.threshold = 10.0 * (run.cr_residual.front().front() + 5.0 * h * h);
  double last = -std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < run.levels.size(); ++l) {
    ConicalRow row{run.levels[l], std::nullopt};
    for (std::size_t t = 0; t < run.times.size(); ++t) {
      if (run.cr_residual[t][l] > table.threshold) {
        row.crossing_time = run.times[t];
        break;
      }
    }
    const double c = row.crossing_time.value_or(std::numeric_limits<double>::infinity());
    if (c < last) table.monotone = false;
    last = c;
    table.rows.push_back(row);
  }
  return table;
}

void write_csv(std::ostream& os, const IvpRun& run) {
  os << "t,level_index,s_value,cr_residual_max,sup_norm_w,err_vs_series\n";
  for (std::size_t t = 0; t < run.times.size(); ++t) {
    for (std::size_t l = 0; l < run.levels.size(); ++l) {
      os << format(run.times[t]) << ',' << run.levels[l].index << ',' << format(run.levels[l].s) << ','
         << format(run.cr_residual[t][l]) << ',' << format(run.sup_norm_w[t][l]) << ',';
      if (run.err_vs_series[t][l]) os << format(*run.err_vs_series[t][l]);
      os << '\n';
    }
  }
}

}  // namespace epcx
