#include "epcx/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "epcx/cauchy.hpp"
#include "epcx/error.hpp"
#include "epcx/stencil.hpp"

namespace epcx {

InteriorEstimate interior_estimate_check(const HoloPoly& f, const Domain& domain, GC zeta,
                                         std::size_t resolution) {
  const AlgebraParams& p = f.params();
  require_elliptic(p);
  InteriorEstimate r;
  r.dist = distance_to_boundary(domain, zeta.x, zeta.y);
  if (!(r.dist > 0.0)) throw Error(Errc::invalid_argument, "zeta is not an interior point");
  const NormConstants k = equivalence_constants(p);
  r.lhs = euclid(eval(derive(f), zeta.x, zeta.y));
  r.sup = sup_norm(f, domain, resolution);
  r.rhs = k.k2 * std::sqrt(p.alpha) / (k.k1 * k.k1 * r.dist) * r.sup;
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-9);
  return r;
}

namespace {

using Evaluator = std::function<GC(double, double)>;

GC domain_center(const Domain& d) {
  if (const auto* disk = std::get_if<Disk>(&d)) return {disk->cx, disk->cy};
  const auto& r = std::get<Rect>(d);
  return {0.5 * (r.x0 + r.x1), 0.5 * (r.y0 + r.y1)};
}

// Interior sup of |d_zbar f| over nodes inside `compact` outside the collar.
double masked_residual(const ComplexField& f, const Domain& compact, DiffOrder order) {
  const ComplexField r = d_zbar(f, order);
  const GridSpec& g = f.grid;
  double m = 0.0;
  for (std::size_t j = kCollar; j + kCollar < g.ny; ++j) {
    for (std::size_t i = kCollar; i + kCollar < g.nx; ++i) {
      if (distance_to_boundary(compact, g.x(i), g.y(j)) < 0.0) continue;
      m = std::max(m, euclid(r(i, j)));
    }
  }
  return m;
}

void fill_decay(WeierstrassReport& rep) {
  for (std::size_t k = 0; k + 1 < rep.sup_differences.size(); ++k) {
    const double a = rep.sup_differences[k];
    const double b = rep.sup_differences[k + 1];
    double ratio = 0.0;
    if (a > 0.0) {
      ratio = b / a;
    } else if (b > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    }
    rep.decay_ratios.push_back(ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (b > a) rep.decreasing = false;
  }
  rep.geometric = rep.max_ratio < 1.0;
}

// Cauchy reproduction at probes and path-integral bounds, for any evaluator.
void elliptic_checks(WeierstrassReport& rep, const std::vector<Evaluator>& seq,
                     const Domain& compact, const AlgebraParams& p,
                     const WeierstrassOptions& opt) {
  if (!p.elliptic()) return;
  rep.elliptic_checks_run = true;
  const GC center = domain_center(compact);
  const Contour c{center.x, center.y, inradius(compact), opt.contour_nodes};
  const std::vector<GC> pts = contour_points(c);
  const Evaluator& last = seq.back();

  std::vector<GC> last_on_c(pts.size());
  for (std::size_t n = 0; n < pts.size(); ++n) last_on_c[n] = last(pts[n].x, pts[n].y);

  // Probes on a golden-angle spiral inside 0.7 r.
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < opt.probes; ++k) {
    const double rho = 0.7 * c.radius * std::sqrt((static_cast<double>(k) + 0.5) /
                                                  static_cast<double>(opt.probes));
    const double t = golden * static_cast<double>(k);
    const GC zeta{center.x + rho * std::cos(t), center.y + rho * std::sin(t)};
    const GC err = cauchy_from_samples(last_on_c, c, zeta, p) - last(zeta.x, zeta.y);
    rep.cauchy_max_error = std::max(rep.cauchy_max_error, euclid(err));
  }

  const NormConstants kc = equivalence_constants(p);
  const double length = 2.0 * std::numbers::pi * c.radius;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    std::vector<GC> diff(pts.size());
    double sup = 0.0;
    for (std::size_t n = 0; n < pts.size(); ++n) {
      diff[n] = last_on_c[n] - seq[k](pts[n].x, pts[n].y);
      sup = std::max(sup, euclid(diff[n]));
    }
    PathBound b;
    b.lhs = norm_ab(contour_integral(diff, c, p), p);
    b.rhs = sup * length / (kc.k1 * kc.k1);
    b.holds = b.lhs <= b.rhs * (1.0 + 1e-9);
    rep.path_bounds.push_back(b);
  }
}

void require_sequence(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_argument, "need at least three sequence elements");
}

}  // namespace

WeierstrassReport weierstrass_check(const std::vector<HoloPoly>& sequence, const Domain& compact,
                                    const WeierstrassOptions& options) {
  require_sequence(sequence.size());
  const AlgebraParams& p = sequence.front().params();
  for (const HoloPoly& f : sequence) {
    if (!(f.params() == p)) throw Error(Errc::params_mismatch, "sequence mixes algebras");
  }
  WeierstrassReport rep;
  const std::vector<GC> pts = sample_points(compact, options.resolution);
  for (std::size_t k = 0; k + 1 < sequence.size(); ++k) {
    const HoloPoly d = sub_poly(sequence[k + 1], sequence[k]);
    double sup = 0.0;
    if (!d.is_zero()) {
      for (const GC& z : pts) sup = std::max(sup, euclid(eval(d, z.x, z.y)));
    }
    rep.sup_differences.push_back(sup);
  }
  fill_decay(rep);

  const ComplexField last = to_field(sequence.back(), grid_for(compact, options.h));
  rep.residual_second_order = masked_residual(last, compact, DiffOrder::second);
  rep.residual_fourth_order = masked_residual(last, compact, DiffOrder::fourth);

  std::vector<Evaluator> evals;
  for (const HoloPoly& f : sequence) evals.emplace_back([&f](double x, double y) { return eval(f, x, y); });
  elliptic_checks(rep, evals, compact, p, options);
  return rep;
}

WeierstrassReport weierstrass_check(const std::vector<ComplexField>& sequence,
                                    const Domain& compact, const WeierstrassOptions& options) {
  require_sequence(sequence.size());
  const GridSpec& g = sequence.front().grid;
  const AlgebraParams& p = sequence.front().params;
  for (const ComplexField& f : sequence) {
    if (!(f.grid == g)) throw Error(Errc::grid_mismatch, "sequence elements live on different grids");
    if (!(f.params == p)) throw Error(Errc::params_mismatch, "sequence mixes algebras");
  }
  require_grid(g);
  WeierstrassReport rep;
  for (std::size_t k = 0; k + 1 < sequence.size(); ++k) {
    double sup = 0.0;
    for (std::size_t j = 0; j < g.ny; ++j) {
      for (std::size_t i = 0; i < g.nx; ++i) {
        if (distance_to_boundary(compact, g.x(i), g.y(j)) < 0.0) continue;
        sup = std::max(sup, euclid(sequence[k + 1](i, j) - sequence[k](i, j)));
      }
    }
    rep.sup_differences.push_back(sup);
  }
  fill_decay(rep);

  rep.residual_second_order = masked_residual(sequence.back(), compact, DiffOrder::second);
  rep.residual_fourth_order = masked_residual(sequence.back(), compact, DiffOrder::fourth);

  std::vector<Evaluator> evals;
  for (const ComplexField& f : sequence) {
    evals.emplace_back([&f](double x, double y) { return interpolate(f, x, y); });
  }
  elliptic_checks(rep, evals, compact, p, options);
  return rep;
}

}  // namespace epcx
