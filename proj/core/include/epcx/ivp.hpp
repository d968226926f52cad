#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "epcx/algebra.hpp"
#include "epcx/grid.hpp"
#include "epcx/holo.hpp"
#include "epcx/operator.hpp"
#include "epcx/rewrite.hpp"

namespace epcx {

enum class Integrator { rk4, series };

struct IvpConfig {
  AlgebraParams params;
  Domain domain = Rect{};
  /// Grid covering the bounding box of `domain`; see grid_for.
  GridSpec grid;
  /// Number of nested subdomains, at least 2.
  std::size_t exhaustion_levels = 4;
  double dt = 1e-3;
  double t_end = 0.1;
  Integrator method = Integrator::rk4;
  /// Truncation order of the series, both for Integrator::series and for the
  /// err_vs_series column.
  int series_order = 12;
  /// dt must not exceed cfl * h / max |a_ij, b_ij|.
  double cfl = 0.5;
  /// Keep w at each output time in IvpRun::fields.
  bool keep_fields = true;
};

/// Subdomain of points at euclidean distance >= depth from the boundary.
struct ExhaustionLevel {
  std::size_t index = 0;
  double depth = 0.0;
  /// inradius - depth; smaller s is deeper.
  double s = 0.0;
};

struct IvpRun {
  std::vector<ExhaustionLevel> levels;
  std::vector<double> times;
  std::vector<ComplexField> fields;
  /// Indexed [time][level]: interior sup |d_zbar w|, sup |w|, and sup |w - series|.
  std::vector<std::vector<double>> cr_residual;
  std::vector<std::vector<double>> sup_norm_w;
  std::vector<std::vector<std::optional<double>>> err_vs_series;
  double h = 0.0;
};

/// Exhaustion levels k = 0..n-1 at depth inradius * k / n.
[[nodiscard]] std::vector<ExhaustionLevel> exhaustion(const Domain& d, std::size_t n);

/// Grid nodes of a level: inside the subdomain and at least kCollar cells from
/// the grid edge.
[[nodiscard]] std::vector<std::size_t> level_nodes(const Domain& d, const GridSpec& g,
                                                   const ExhaustionLevel& level);

/// Solves w_t = L w, i.e. the real system for (u, v), with classic RK4 on the
/// method-of-lines discretization (Integrator::rk4) or by sampling
/// series_solution (Integrator::series). Output every
/// max(1, round(t_end / (100 dt))) steps and at t_end.
/// Throws Error{cfl_violation}, Error{non_finite_state} (|w| > 1e12),
/// Error{params_mismatch}, Error{invalid_argument}.
[[nodiscard]] IvpRun solve(const IvpConfig& cfg, const RealCoeffs& rc, const HoloPoly& w0);

/// Truncated formal solution sum_{n<=order} t^n / n! L^n w0 for L with
/// B = F = 0 and holomorphic polynomial A, E, G. C and D are ignored since
/// they act on d_zbar w = 0.
/// Throws Error{not_associated}, Error{degree_overflow}.
[[nodiscard]] HoloPoly series_solution(const OperatorCoeffs& L, const HoloPoly& w0, double t, int order);

struct DriftReport {
  /// Per level: max over t of the residual and its mean growth rate
  /// (r(t_end) - r(0)) / t_end.
  std::vector<double> max_residual;
  std::vector<double> growth_rate;
};

[[nodiscard]] DriftReport holomorphy_drift(const IvpRun& run);

struct ConicalRow {
  ExhaustionLevel level;
  /// First output time with residual > threshold; empty if never.
  std::optional<double> crossing_time;
};

struct ConicalTable {
  /// 10 * (initial residual on the outermost level + 5 h^2).
  double threshold = 0.0;
  std::vector<ConicalRow> rows;
  /// Crossing times non-decreasing with depth, "never" counting as +infinity.
  bool monotone = true;
};

[[nodiscard]] ConicalTable conical_diagnostic(const IvpRun& run, const IvpConfig& cfg);

/// CSV with header t,level_index,s_value,cr_residual_max,sup_norm_w,err_vs_series.
void write_csv(std::ostream& os, const IvpRun& run);

}  // namespace epcx
