#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "epcx/algebra.hpp"
#include "epcx/grid.hpp"
#include "epcx/holo.hpp"
#include "epcx/operator.hpp"
#include "epcx/rewrite.hpp"

namespace epcx::app {

using nlohmann::json;

/// Malformed or out-of-schema configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejects keys outside `allowed` and requires every key in `required`.
void check_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed,
                std::initializer_list<std::string_view> required = {});

[[nodiscard]] double get_number(const json& j, std::string_view key, std::string_view where);
[[nodiscard]] long long get_integer(const json& j, std::string_view key, std::string_view where);

/// {"alpha": a, "beta": b}
[[nodiscard]] AlgebraParams parse_params(const json& j);
[[nodiscard]] json to_json(const AlgebraParams& p);

/// [x, y]
[[nodiscard]] GC parse_gc(const json& j, std::string_view where);
[[nodiscard]] json to_json(const GC& z);

/// A number, or {"terms": [[i, j, c], ...]} for sum c x^i y^j.
[[nodiscard]] Scalar parse_scalar(const json& j, std::string_view where);
[[nodiscard]] json to_json(const Scalar& s);

/// {"coeffs": [[x0, y0], [x1, y1], ...]} for sum c_k Z^k.
[[nodiscard]] HoloPoly parse_holo(const json& j, const AlgebraParams& p, std::string_view where);
[[nodiscard]] json to_json(const HoloPoly& f);

/// [x, y] (constant), {"coeffs": ...} (holomorphic polynomial), or
/// {"re": scalar, "im": scalar} (general polynomial).
[[nodiscard]] Coefficient parse_coefficient(const json& j, const AlgebraParams& p, std::string_view where);

/// Object with any of a11 ... d3; missing entries are zero.
[[nodiscard]] RealCoeffs parse_real(const json& j);
[[nodiscard]] json to_json(const RealCoeffs& rc);

/// Object with any of a11, a12, b11, b12.
[[nodiscard]] FreeCoeffs parse_free(const json& j);

/// Object with any of A ... G.
[[nodiscard]] OperatorCoeffs parse_operator(const json& j, const AlgebraParams& p);

/// {"rect": [x0, y0, x1, y1]} or {"disk": [cx, cy, r]}.
[[nodiscard]] Domain parse_domain(const json& j);
[[nodiscard]] json to_json(const Domain& d);

}  // namespace epcx::app
