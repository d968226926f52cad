#include "app/json_io.hpp"

#include <algorithm>
#include <cmath>

#include "epcx/error.hpp"

namespace epcx::app {

namespace {

[[noreturn]] void fail(std::string_view where, const std::string& what) {
  throw ConfigError(std::string(where) + ": " + what);
}

double as_number(const json& j, std::string_view where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

const json& as_array(const json& j, std::string_view where, std::size_t size = 0) {
  if (!j.is_array()) fail(where, "expected an array");
  if (size != 0 && j.size() != size) fail(where, "expected " + std::to_string(size) + " entries");
  return j;
}

}  // namespace

void check_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed,
                std::initializer_list<std::string_view> required) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(where, "unknown key \"" + key + "\"");
  }
  for (std::string_view key : required) {
    if (!j.contains(std::string(key))) fail(where, "missing key \"" + std::string(key) + "\"");
  }
}

double get_number(const json& j, std::string_view key, std::string_view where) {
  return as_number(j.at(std::string(key)), std::string(where) + "." + std::string(key));
}

long long get_integer(const json& j, std::string_view key, std::string_view where) {
  const json& v = j.at(std::string(key));
  if (!v.is_number_integer()) fail(std::string(where) + "." + std::string(key), "expected an integer");
  return v.get<long long>();
}

AlgebraParams parse_params(const json& j) {
  check_keys(j, "params", {"alpha", "beta"}, {"alpha", "beta"});
  return {get_number(j, "alpha", "params"), get_number(j, "beta", "params")};
}

json to_json(const AlgebraParams& p) { return {{"alpha", p.alpha}, {"beta", p.beta}}; }

GC parse_gc(const json& j, std::string_view where) {
  as_array(j, where, 2);
  return {as_number(j[0], where), as_number(j[1], where)};
}

json to_json(const GC& z) { return json::array({z.x, z.y}); }

Scalar parse_scalar(const json& j, std::string_view where) {
  if (j.is_number()) return as_number(j, where);
  check_keys(j, where, {"terms"}, {"terms"});
  BiPoly b;
  for (const json& t : as_array(j["terms"], where)) {
    as_array(t, where, 3);
    if (!t[0].is_number_unsigned() || !t[1].is_number_unsigned()) fail(where, "term exponents must be non-negative integers");
    const auto i = t[0].get<std::size_t>(), k = t[1].get<std::size_t>();
    if (i + k > static_cast<std::size_t>(kMaxDegree)) fail(where, "term degree exceeds " + std::to_string(kMaxDegree));
    b.set_coeff(i, k, b.coeff(i, k) + as_number(t[2], where));
  }
  if (b.degree() <= 0) return b.coeff(0, 0);
  return b;
}

json to_json(const Scalar& s) {
  if (const auto* c = std::get_if<double>(&s)) return *c;
  if (const auto* b = std::get_if<BiPoly>(&s)) {
    json terms = json::array();
    for (int n = 0; n <= b->degree(); ++n) {
      for (int i = n; i >= 0; --i) {
        const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(n - i);
        if (const double c = b->coeff(ii, jj); c != 0.0) terms.push_back(json::array({ii, jj, c}));
      }
    }
    return {{"terms", terms}};
  }
  const auto& f = std::get<ScalarField>(s);
  return {{"grid", {{"x0", f.grid.x0}, {"y0", f.grid.y0}, {"nx", f.grid.nx}, {"ny", f.grid.ny}, {"h", f.grid.h}}},
          {"values", f.values}};
}

HoloPoly parse_holo(const json& j, const AlgebraParams& p, std::string_view where) {
  check_keys(j, where, {"coeffs"}, {"coeffs"});
  std::vector<GC> c;
  for (const json& v : as_array(j["coeffs"], where)) c.push_back(parse_gc(v, where));
  if (c.size() > static_cast<std::size_t>(kMaxDegree) + 1) fail(where, "degree exceeds " + std::to_string(kMaxDegree));
  return HoloPoly(p, std::move(c));
}

json to_json(const HoloPoly& f) {
  json c = json::array();
  for (const GC& v : f.coeffs()) c.push_back(to_json(v));
  return {{"coeffs", c}};
}

Coefficient parse_coefficient(const json& j, const AlgebraParams& p, std::string_view where) {
  if (j.is_array()) return parse_gc(j, where);
  if (j.is_object() && j.contains("coeffs")) return parse_holo(j, p, where);
  check_keys(j, where, {"re", "im"});
  const Scalar re = j.contains("re") ? parse_scalar(j["re"], std::string(where) + ".re") : Scalar{0.0};
  const Scalar im = j.contains("im") ? parse_scalar(j["im"], std::string(where) + ".im") : Scalar{0.0};
  auto poly = [](const Scalar& s) {
    if (const auto* c = std::get_if<double>(&s)) return BiPoly(*c);
    return std::get<BiPoly>(s);
  };
  return PolyPair(poly(re), poly(im));
}

RealCoeffs parse_real(const json& j) {
  check_keys(j, "coefficients", {"a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22", "c1", "c2", "c3", "d1",
                                 "d2", "d3"});
  RealCoeffs rc;
  const auto members = rc.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::string key(RealCoeffs::kNames[k]);
    if (j.contains(key)) *members[k] = parse_scalar(j[key], "coefficients." + key);
  }
  return rc;
}

json to_json(const RealCoeffs& rc) {
  json out = json::object();
  const auto members = rc.members();
  for (std::size_t k = 0; k < members.size(); ++k) out[std::string(RealCoeffs::kNames[k])] = to_json(*members[k]);
  return out;
}

FreeCoeffs parse_free(const json& j) {
  check_keys(j, "free", {"a11", "a12", "b11", "b12"});
  FreeCoeffs f;
  for (auto [key, slot] : {std::pair{"a11", &f.a11}, {"a12", &f.a12}, {"b11", &f.b11}, {"b12", &f.b12}}) {
    if (j.contains(key)) *slot = parse_scalar(j[key], std::string("free.") + key);
  }
  return f;
}

OperatorCoeffs parse_operator(const json& j, const AlgebraParams& p) {
  check_keys(j, "operator", {"A", "B", "C", "D", "E", "F", "G"});
  OperatorCoeffs L{p};
  for (auto [key, slot] : {std::pair{"A", &L.A}, {"B", &L.B}, {"C", &L.C}, {"D", &L.D}, {"E", &L.E}, {"F", &L.F},
                           {"G", &L.G}}) {
    if (j.contains(key)) *slot = parse_coefficient(j[key], p, std::string("operator.") + key);
  }
  return L;
}

Domain parse_domain(const json& j) {
  check_keys(j, "domain", {"rect", "disk"});
  if (j.size() != 1) fail("domain", "expected exactly one of \"rect\", \"disk\"");
  if (j.contains("rect")) {
    const json& r = as_array(j["rect"], "domain.rect", 4);
    const Rect rect{as_number(r[0], "domain.rect"), as_number(r[1], "domain.rect"), as_number(r[2], "domain.rect"),
                    as_number(r[3], "domain.rect")};
    if (!(rect.x1 > rect.x0 && rect.y1 > rect.y0)) fail("domain.rect", "expected x0 < x1 and y0 < y1");
    return rect;
  }
  const json& d = as_array(j["disk"], "domain.disk", 3);
  const Disk disk{as_number(d[0], "domain.disk"), as_number(d[1], "domain.disk"), as_number(d[2], "domain.disk")};
  if (!(disk.r > 0.0)) fail("domain.disk", "radius must be positive");
  return disk;
}

json to_json(const Domain& d) {
  if (const auto* r = std::get_if<Rect>(&d)) return {{"rect", {r->x0, r->y0, r->x1, r->y1}}};
  const auto& c = std::get<Disk>(d);
  return {{"disk", {c.cx, c.cy, c.r}}};
}

}  // namespace epcx::app
