#include "epcx/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epcx/error.hpp"

namespace epcx {

void require_elliptic(const AlgebraParams& p) {
  if (!p.elliptic()) {
    throw Error(Errc::not_elliptic, "4*alpha - beta^2 = " + std::to_string(p.discriminant()) +
                                        " is not positive");
  }
}

GC inv(const GC& z, const AlgebraParams& p, double eps) {
  const double q = quadratic_form(z, p);
  if (!(std::abs(q) > eps)) {
    throw Error(Errc::singular_element,
                "x^2 - beta*x*y + alpha*y^2 = " + std::to_string(q) + " (zero divisor)");
  }
  return {(z.x - p.beta * z.y) / q, -z.y / q};
}

double norm_ab(const GC& z, const AlgebraParams& p) {
  require_elliptic(p);
  // Q is positive definite here; clamp the rounding floor at the origin.
  return std::sqrt(std::max(0.0, quadratic_form(z, p)));
}

NormConstants equivalence_constants(const AlgebraParams& p) {
  require_elliptic(p);
  const double mean = 0.5 * (1.0 + p.alpha);
  const double radius = 0.5 * std::hypot(1.0 - p.alpha, p.beta);
  const double lambda_max = mean + radius;
  // lambda_min * lambda_max = det = alpha - beta^2/4; avoids cancellation in mean - radius.
  const double lambda_min = 0.25 * p.discriminant() / lambda_max;
  return {1.0 / std::sqrt(lambda_max), 1.0 / std::sqrt(lambda_min)};
}

GC ihat(const AlgebraParams& p) {
  require_elliptic(p);
  const double s = std::sqrt(p.discriminant());
  return {p.beta / s, 2.0 / s};
}

}  // namespace epcx
