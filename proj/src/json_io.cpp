#include "nilcone/json_io.hpp"

#include "nilcone/errors.hpp"

namespace nilcone::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("key '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("key '") + key + "' must be an array");
  return v;
}

}  // namespace

Json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Json form_to_json(const BinaryForm& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(rational_to_json(c));
  return {{"degree", f.degree()}, {"coeffs", coeffs}};
}

BinaryForm form_from_json(const Json& j) {
  const int degree = int_field(j, "degree");
  const Json& arr = array_field(j, "coeffs");
  if (degree < 0) {
    for (const auto& c : arr) {
      if (rational_from_json(c) != 0) throw InputError("negative-degree form must be zero");
    }
    return BinaryForm::zero(degree);
  }
  std::vector<Rational> coeffs;
  for (const auto& c : arr) coeffs.push_back(rational_from_json(c));
  return BinaryForm(degree, std::move(coeffs));
}

Json divisor_to_json(const DivisorP1& d) { return form_to_json(d.form()); }

DivisorP1 divisor_from_json(const Json& j) { return DivisorP1(form_from_json(j)); }

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an ascending coefficient list");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

Json bundle_to_json(const SplitBundle& e) { return {{"twists", e.twists()}}; }

SplitBundle bundle_from_json(const Json& j) {
  std::vector<int> twists;
  for (const auto& t : array_field(j, "twists")) {
    if (!t.is_number_integer()) throw InputError("twists must be integers");
    twists.push_back(t.get<int>());
  }
  return SplitBundle(std::move(twists));
}

Json map_to_json(const SheafMap& f) {
  Json rows = Json::array();
  for (const auto& row : f.entries()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(form_to_json(e));
    rows.push_back(r);
  }
  return {{"source", bundle_to_json(f.source())}, {"target", bundle_to_json(f.target())}, {"entries", rows}};
}

SheafMap map_from_json(const Json& j) {
  std::vector<std::vector<BinaryForm>> entries;
  for (const auto& row : array_field(j, "entries")) {
    if (!row.is_array()) throw InputError("map entries must be an array of rows");
    std::vector<BinaryForm> r;
    for (const auto& e : row) r.push_back(form_from_json(e));
    entries.push_back(std::move(r));
  }
  return SheafMap(bundle_from_json(field(j, "source")), bundle_from_json(field(j, "target")),
                  std::move(entries));
}

Json subsheaf_to_json(const LineSubsheaf& lambda) { return map_to_json(lambda.as_map()); }

LineSubsheaf subsheaf_from_json(const Json& j) { return LineSubsheaf::from_map(map_from_json(j)); }

Json quasimap_to_json(const QuasiMapClass& c) {
  if (std::holds_alternative<GenuineMap>(c)) return {{"kind", "GenuineMap"}};
  return {{"kind", "QuasiMapWithDefect"}, {"defect", divisor_to_json(std::get<QuasiMapWithDefect>(c).defect)}};
}

Json higgs_to_json(const HiggsField& phi) {
  return {{"d", phi.d()},
          {"ell", phi.ell()},
          {"p", form_to_json(phi.p())},
          {"q", form_to_json(phi.q())},
          {"r", form_to_json(phi.r())}};
}

HiggsField higgs_from_json(const Json& j) {
  return HiggsField(int_field(j, "d"), int_field(j, "ell"), form_from_json(field(j, "p")),
                    form_from_json(field(j, "q")), form_from_json(field(j, "r")));
}

Json canonical_to_json(const CanonicalNilpotent& c) {
  return {{"s", form_to_json(c.s)}, {"t", form_to_json(c.t)}, {"h", form_to_json(c.h)}, {"k", c.k}};
}

CanonicalNilpotent canonical_from_json(const Json& j) {
  return {form_from_json(field(j, "s")), form_from_json(field(j, "t")), form_from_json(field(j, "h")),
          int_field(j, "k")};
}

Json module_to_json(const fitting::PresentedModule& m) {
  Json rows = Json::array();
  for (const auto& row : m.matrix()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(poly_to_json(e));
    rows.push_back(r);
  }
  return {{"b", m.target_rank()}, {"a", m.source_rank()}, {"entries", rows}};
}

fitting::PresentedModule module_from_json(const Json& j) {
  fitting::Matrix<Poly> entries;
  for (const auto& row : array_field(j, "entries")) {
    if (!row.is_array()) throw InputError("module entries must be an array of rows");
    std::vector<Poly> r;
    for (const auto& e : row) r.push_back(poly_from_json(e));
    entries.push_back(std::move(r));
  }
  return fitting::PresentedModule(int_field(j, "b"), int_field(j, "a"), std::move(entries));
}

Json ideal_to_json(const fitting::PrincipalIdeal& ideal) {
  const char* kind = ideal.is_zero() ? "zero" : ideal.is_unit() ? "unit" : "proper";
  return {{"kind", kind}, {"generator", poly_to_json(ideal.generator())}};
}

Json fiber_to_json(const springer::FiberDescription& fiber) {
  Json points = Json::array();
  for (const auto& p : fiber.points) points.push_back({{"lambda", subsheaf_to_json(p.lambda())}});
  return {{"m", fiber.component_degree}, {"points", points}, {"unresolved", fiber.unresolved}};
}

Json census_to_json(const census::CensusReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r = {{"d", row.d}, {"square_root", row.square_root}, {"count", row.count}};
    r["bun_b_dimension"] = row.bun_b_dimension ? Json(*row.bun_b_dimension) : Json(nullptr);
    r["bundle_rank"] = row.bundle_rank ? Json(*row.bundle_rank) : Json(nullptr);
    r["dimension"] = row.dimension ? Json(*row.dimension) : Json(nullptr);
    rows.push_back(r);
  }
  Json families = {{"integer_family", {{"d_greater_than", report.min_degree}}},
                   {"square_root_count", report.square_root_count},
                   {"square_root_degree", report.min_degree},
                   {"zero_section_present", report.zero_section_present}};
  return {{"g", report.g},
          {"degL", report.degL},
          {"regime", census::to_string(report.regime)},
          {"component_families", families},
          {"dimension", report.dimension ? Json(*report.dimension) : Json(nullptr)},
          {"components", rows}};
}

}  // namespace nilcone::json_io
