#pragma once

#include <string>

#include <json.hpp>

#include "dpz/adjoint.hpp"
#include "dpz/manin.hpp"
#include "dpz/surface.hpp"

namespace dpz {

using Json = nlohmann::json;

// Divisor classes serialize as integer arrays [a, b1, ..., br]; rationals as
// strings "p/q" in lowest terms; surface models as
// {"r": int, "effective_roots": [[a, b1, ...], ...]}.

Json class_to_json(const DivisorClass& c);
Json rational_class_to_json(const RationalClass& c);
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

DivisorClass class_from_json(const Json& j);
// Parse a class from CLI text like "[6,-2,-2,...]".
DivisorClass class_from_string(const std::string& text);

Json model_to_json(const SurfaceModel& s);
SurfaceModel model_from_json(const Json& j);
SurfaceModel model_from_file(const std::string& path);

Json zariski_to_json(const ZariskiDecomposition& z);
Json nefdec_to_json(const NefDecomposition& d);
Json adjoint_to_json(const AInvariantResult& a);
Json breaking_to_json(const std::vector<BreakingCase>& cases);
Json flags_to_json(const PathologyFlags& f);
Json census_to_json(const ComponentCensus& c);

}  // namespace dpz
