#include "dpz/json_io.hpp"

#include <fstream>

namespace dpz {

Json class_to_json(const DivisorClass& c) {
  Json arr = Json::array();
  for (const Int& x : c.coeffs()) arr.push_back(x.convert_to<long long>());
  return arr;
}

std::string rat_to_string(const Rat& q) {
  return rat_num(q).str() + "/" + rat_den(q).str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int den(s.substr(slash + 1));
    if (den <= 0) fail(Err::InvalidInput, "rational: denominator must be positive");
    return Rat(Int(s.substr(0, slash)), den);
  } catch (const std::exception&) {
    fail(Err::InvalidInput, "malformed rational '" + s + "'");
  }
}

Json rational_class_to_json(const RationalClass& c) {
  Json arr = Json::array();
  for (const Rat& q : c.coeffs()) arr.push_back(rat_to_string(q));
  return arr;
}

DivisorClass class_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    fail(Err::InvalidInput, "divisor class must be a nonempty integer array");
  std::vector<Int> coeffs;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      fail(Err::InvalidInput, "divisor class entries must be integers");
    coeffs.emplace_back(x.get<long long>());
  }
  const int r = static_cast<int>(coeffs.size()) - 1;
  return DivisorClass(r, std::move(coeffs));
}

DivisorClass class_from_string(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::InvalidInput, "malformed class literal '" + text + "'");
  return class_from_json(j);
}

Json model_to_json(const SurfaceModel& s) {
  Json roots = Json::array();
  for (const auto& rho : s.effective_roots().roots()) roots.push_back(class_to_json(rho));
  return Json{{"r", s.r()}, {"effective_roots", roots}};
}

SurfaceModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j["r"].is_number_integer())
    fail(Err::InvalidInput, "surface model must be {\"r\": int, \"effective_roots\": [...]}");
  const int r = j["r"].get<int>();
  std::vector<DivisorClass> roots;
  if (j.contains("effective_roots")) {
    if (!j["effective_roots"].is_array())
      fail(Err::InvalidInput, "effective_roots must be an array of classes");
    for (const auto& x : j["effective_roots"]) roots.push_back(class_from_json(x));
  }
  return SurfaceModel(r, RootBasis(r, std::move(roots)));
}

SurfaceModel model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::InvalidInput, "cannot open model file '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Err::InvalidInput, "model file '" + path + "' is not valid JSON");
  return model_from_json(j);
}

Json zariski_to_json(const ZariskiDecomposition& z) {
  Json negative = Json::array();
  for (const auto& [curve, coeff] : z.negative)
    negative.push_back(Json{{"curve", class_to_json(curve)}, {"coeff", rat_to_string(coeff)}});
  return Json{{"positive", rational_class_to_json(z.positive)}, {"negative", negative}};
}

Json nefdec_to_json(const NefDecomposition& d) {
  Json coeffs = Json::array();
  for (const Int& n : d.coefficients) coeffs.push_back(n.convert_to<long long>());
  Json chain = Json::array();
  for (const auto& e : d.chain) chain.push_back(class_to_json(e));
  return Json{{"coefficients", coeffs},
              {"residual", class_to_json(d.residual)},
              {"chain", chain},
              {"ends_on_quadric", d.ends_on_quadric}};
}

Json adjoint_to_json(const AInvariantResult& a) {
  Json j{{"a", a.is_infinite() ? Json("inf") : Json(rat_to_string(*a.a))},
         {"rigid", a.rigid},
         {"case", adjoint_case_name(a.case_label)}};
  if (a.fiber_class) j["fiber"] = class_to_json(*a.fiber_class);
  return j;
}

Json breaking_to_json(const std::vector<BreakingCase>& cases) {
  Json arr = Json::array();
  for (const auto& c : cases) {
    Json chars = Json::array();
    for (int p : c.required_char) chars.push_back(p);
    arr.push_back(Json{{"case", c.case_id},
                       {"description", c.description},
                       {"required_char", chars},
                       {"required_degree", c.required_degree},
                       {"required_type", breaking_type_name(c.required_type)},
                       {"a", rat_to_string(c.a_value)},
                       {"possible", tri_name(c.possible)}});
  }
  return arr;
}

Json flags_to_json(const PathologyFlags& f) {
  return Json{{"type1", tri_name(f.type1)},
              {"type2", tri_name(f.type2)},
              {"type3", tri_name(f.type3)},
              {"source", flag_source_name(f.source)}};
}

Json census_to_json(const ComponentCensus& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json je{{"kind", census_kind_name(e.kind)}};
    if (e.expected_dim) je["expected_dim"] = e.expected_dim->convert_to<long long>();
    if (e.conic) je["conic"] = class_to_json(*e.conic);
    if (e.cover_multiplicity)
      je["multiplicity"] = e.cover_multiplicity->convert_to<long long>();
    entries.push_back(je);
  }
  Json j{{"applicable", c.applicable},
         {"entries", entries},
         {"lower_bound_only", c.lower_bound_only}};
  if (!c.applicable) j["reason"] = c.reason;
  return j;
}

}  // namespace dpz
