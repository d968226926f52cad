#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace epcx {

enum class Errc {
  singular_element,
  not_elliptic,
  params_mismatch,
  grid_too_small,
  grid_mismatch,
  lemma1_inadmissible,
  zeta_on_contour,
  alpha_zero,
  solve_failure,
  cfl_violation,
  non_finite_state,
  not_associated,
  degree_overflow,
  invalid_argument,
};

[[nodiscard]] constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::singular_element: return "SingularElement";
    case Errc::not_elliptic: return "NotElliptic";
    case Errc::params_mismatch: return "ParamsMismatch";
    case Errc::grid_too_small: return "GridTooSmall";
    case Errc::grid_mismatch: return "GridMismatch";
    case Errc::lemma1_inadmissible: return "Lemma1Inadmissible";
    case Errc::zeta_on_contour: return "ZetaOnContour";
    case Errc::alpha_zero: return "AlphaZero";
    case Errc::solve_failure: return "SolveFailure";
    case Errc::cfl_violation: return "CflViolation";
    case Errc::non_finite_state: return "NonFiniteState";
    case Errc::not_associated: return "NotAssociated";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Library error. Every failure mode of the public API is reported through
/// this type; `code()` identifies the condition.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace epcx
