#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "epcx/algebra.hpp"
#include "epcx/bipoly.hpp"
#include "epcx/grid.hpp"
#include "epcx/holo.hpp"

namespace epcx {

/// A coefficient of the first-order operator: a constant, a holomorphic
/// polynomial, a general GC-valued polynomial in (x, y), or grid samples.
using Coefficient = std::variant<GC, HoloPoly, PolyPair, ComplexField>;

/// Lw = A d_z w + B conj(d_z w) + C d_zbar w + D conj(d_zbar w) + E w + F conj(w) + G.
struct OperatorCoeffs {
  AlgebraParams params;
  Coefficient A{GC{}};
  Coefficient B{GC{}};
  Coefficient C{GC{}};
  Coefficient D{GC{}};
  Coefficient E{GC{}};
  Coefficient F{GC{}};
  Coefficient G{GC{}};
};

/// Samples a coefficient on `grid`. Throws Error{params_mismatch} when a
/// polynomial or field belongs to another algebra and Error{grid_mismatch}
/// when a sampled coefficient lives on a different grid.
[[nodiscard]] ComplexField sample(const Coefficient& c, const GridSpec& grid,
                                  const AlgebraParams& p);

/// Pointwise value at grid node (i, j).
[[nodiscard]] GC value_at(const Coefficient& c, const GridSpec& grid, std::size_t i,
                          std::size_t j);

/// Applies L to a sampled function; derivatives use the second-order stencils.
[[nodiscard]] ComplexField apply_L(const OperatorCoeffs& L, const ComplexField& f);

/// The six holomorphic probes 0, 1, i, (-beta - i) Z, Z, -Z^2.
[[nodiscard]] std::vector<HoloPoly> default_probes(const AlgebraParams& p);

/// max over probes w of the interior sup of |d_zbar(L w)|. An empty probe
/// list means default_probes(L.params). O(h^2) when L is associated.
[[nodiscard]] double association_residual(const OperatorCoeffs& L,
                                          const std::vector<HoloPoly>& probes,
                                          const GridSpec& grid);

enum class Condition { b_zero, f_zero, a_holomorphic, e_holomorphic, g_holomorphic };

[[nodiscard]] std::string label(Condition c);

struct Violation {
  Condition condition;
  double magnitude = 0.0;
  double tolerance = 0.0;
};

struct Verdict {
  /// Measured sup|B|, sup|F|, and holomorphy defects of A, E, G, in Condition order.
  std::array<double, 5> measured{};
  std::vector<Violation> violations;

  [[nodiscard]] bool associated() const { return violations.empty(); }
};

struct VerdictOptions {
  /// Bound for |B|, |F| and for exact (polynomial) holomorphy defects.
  double tol = 1e-9;
  /// Bound for finite-difference defects of sampled coefficients; 5 h^2 when unset.
  std::optional<double> sampled_tol;
};

/// Checks the association conditions: B = F = 0 and A, E, G holomorphic.
/// Constants and HoloPoly coefficients pass holomorphy structurally, PolyPair
/// coefficients are checked with the exact polynomial d_zbar on the nodes of
/// `grid`, and sampled coefficients with the finite-difference d_zbar.
/// Throws Error{lemma1_inadmissible} when alpha beta^2 - 4 alpha^2 = 0.
[[nodiscard]] Verdict sontutschke_verdict(const OperatorCoeffs& L, const GridSpec& grid,
                                          const VerdictOptions& options = {});

}  // namespace epcx
