#include "epcx/operator.hpp"

#include <algorithm>
#include <cmath>

#include "epcx/error.hpp"
#include "epcx/parallel.hpp"
#include "epcx/stencil.hpp"

namespace epcx {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_params(const AlgebraParams& have, const AlgebraParams& want) {
  if (!(have == want)) throw Error(Errc::params_mismatch, "coefficient belongs to another algebra");
}

void require_same_grid(const GridSpec& have, const GridSpec& want) {
  if (!(have == want)) throw Error(Errc::grid_mismatch, "sampled coefficient lives on another grid");
}

double sup_on_nodes(const GridSpec& g, const auto& fn) {
  double m = 0.0;
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) m = std::max(m, euclid(fn(g.x(i), g.y(j))));
  }
  return m;
}

double magnitude(const Coefficient& c, const GridSpec& grid) {
  return std::visit(
      overloaded{
          [](const GC& v) { return euclid(v); },
          [&](const HoloPoly& f) {
            return f.is_zero() ? 0.0
                               : sup_on_nodes(grid, [&](double x, double y) { return eval(f, x, y); });
          },
          [&](const PolyPair& f) { return f.is_zero() ? 0.0 : sup_on_nodes(grid, f); },
          [](const ComplexField& f) { return max_norm(f); },
      },
      c);
}

// Holomorphy defect and the tolerance that applies to it.
std::pair<double, double> holomorphy_defect(const Coefficient& c, const GridSpec& grid,
                                            const AlgebraParams& p, const VerdictOptions& opt) {
  return std::visit(
      overloaded{
          [&](const GC&) { return std::pair{0.0, opt.tol}; },
          [&](const HoloPoly&) { return std::pair{0.0, opt.tol}; },
          [&](const PolyPair& f) {
            const PolyPair r = d_zbar(f, p);
            return std::pair{r.is_zero() ? 0.0 : sup_on_nodes(grid, r), opt.tol};
          },
          [&](const ComplexField& f) {
            const double tol = opt.sampled_tol.value_or(5.0 * f.grid.h * f.grid.h);
            return std::pair{cr_residual(f), tol};
          },
      },
      c);
}

}  // namespace

ComplexField sample(const Coefficient& c, const GridSpec& grid, const AlgebraParams& p) {
  return std::visit(overloaded{
                        [&](const GC& v) { return ComplexField(grid, p, v); },
                        [&](const HoloPoly& f) {
                          require_params(f.params(), p);
                          return to_field(f, grid);
                        },
                        [&](const PolyPair& f) {
                          ComplexField out(grid, p);
                          for (std::size_t j = 0; j < grid.ny; ++j) {
                            for (std::size_t i = 0; i < grid.nx; ++i) out(i, j) = f(grid.x(i), grid.y(j));
                          }
                          return out;
                        },
                        [&](const ComplexField& f) {
                          require_params(f.params, p);
                          require_same_grid(f.grid, grid);
                          return f;
                        },
                    },
                    c);
}

GC value_at(const Coefficient& c, const GridSpec& grid, std::size_t i, std::size_t j) {
  return std::visit(overloaded{
                        [](const GC& v) { return v; },
                        [&](const HoloPoly& f) { return eval(f, grid.x(i), grid.y(j)); },
                        [&](const PolyPair& f) { return f(grid.x(i), grid.y(j)); },
                        [&](const ComplexField& f) {
                          require_same_grid(f.grid, grid);
                          return f(i, j);
                        },
                    },
                    c);
}

ComplexField apply_L(const OperatorCoeffs& L, const ComplexField& f) {
  require_params(f.params, L.params);
  require_grid(f.grid);
  const AlgebraParams& p = L.params;
  const ComplexField dz = d_z(f);
  const ComplexField dzb = d_zbar(f);
  const ComplexField a = sample(L.A, f.grid, p);
  const ComplexField b = sample(L.B, f.grid, p);
  const ComplexField c = sample(L.C, f.grid, p);
  const ComplexField d = sample(L.D, f.grid, p);
  const ComplexField e = sample(L.E, f.grid, p);
  const ComplexField ff = sample(L.F, f.grid, p);
  const ComplexField g = sample(L.G, f.grid, p);
  ComplexField out(f.grid, p);
  parallel_for(f.grid.ny, [&](std::size_t j) {
    for (std::size_t i = 0; i < f.grid.nx; ++i) {
      const std::size_t k = f.grid.index(i, j);
      out.values[k] = mul(a.values[k], dz.values[k], p) + mul(b.values[k], conj(dz.values[k]), p) +
                      mul(c.values[k], dzb.values[k], p) + mul(d.values[k], conj(dzb.values[k]), p) +
                      mul(e.values[k], f.values[k], p) + mul(ff.values[k], conj(f.values[k]), p) +
                      g.values[k];
    }
  });
  return out;
}

std::vector<HoloPoly> default_probes(const AlgebraParams& p) {
  const HoloPoly z = HoloPoly::generator(p);
  return {
      HoloPoly(p, {}),
      HoloPoly::constant(p, kOne),
      HoloPoly::constant(p, kI),
      scale(GC{-p.beta, -1.0}, z),
      z,
      HoloPoly::monomial(p, 2, GC{-1.0, 0.0}),
  };
}

double association_residual(const OperatorCoeffs& L, const std::vector<HoloPoly>& probes,
                            const GridSpec& grid) {
  require_grid(grid);
  const std::vector<HoloPoly> defaults = probes.empty() ? default_probes(L.params) : std::vector<HoloPoly>{};
  const std::vector<HoloPoly>& ws = probes.empty() ? defaults : probes;
  double worst = 0.0;
  for (const HoloPoly& w : ws) {
    require_params(w.params(), L.params);
    worst = std::max(worst, cr_residual(apply_L(L, to_field(w, grid))));
  }
  return worst;
}

std::string label(Condition c) {
  switch (c) {
    case Condition::b_zero: return "B ≠ 0";
    case Condition::f_zero: return "F ≠ 0";
    case Condition::a_holomorphic: return "A not holomorphic";
    case Condition::e_holomorphic: return "E not holomorphic";
    case Condition::g_holomorphic: return "G not holomorphic";
  }
  return "?";
}

Verdict sontutschke_verdict(const OperatorCoeffs& L, const GridSpec& grid,
                            const VerdictOptions& options) {
  if (!L.params.lemma1_admissible()) {
    throw Error(Errc::lemma1_inadmissible,
                "alpha*beta^2 - 4*alpha^2 = 0; the association conditions are not characterized");
  }
  require_grid(grid);
  Verdict v;
  auto check = [&](Condition cond, double measured, double tol) {
    v.measured[static_cast<std::size_t>(cond)] = measured;
    if (!(measured <= tol)) v.violations.push_back({cond, measured, tol});
  };
  check(Condition::b_zero, magnitude(L.B, grid), options.tol);
  check(Condition::f_zero, magnitude(L.F, grid), options.tol);
  const std::array<std::pair<Condition, const Coefficient*>, 3> holo{
      {{Condition::a_holomorphic, &L.A},
       {Condition::e_holomorphic, &L.E},
       {Condition::g_holomorphic, &L.G}}};
  for (const auto& [cond, coef] : holo) {
    const auto [defect, tol] = holomorphy_defect(*coef, grid, L.params, options);
    check(cond, defect, tol);
  }
  return v;
}

}  // namespace epcx
