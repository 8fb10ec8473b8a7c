#pragma once

#include <string>

#include <json.hpp>

#include "chazy/catalog.hpp"
#include "chazy/geometry.hpp"
#include "chazy/series.hpp"

namespace chazy {

using Json = nlohmann::ordered_json;

Json to_json(const QuadExt& x);            // {"a":"p/q","b":"p/q","d":n}
Json to_json(const CScalar& x);            // [re, im]
Json to_json(const MPoly& f);              // canonical sorted term list
Json to_json(const RatFun& f);
Json to_json(const SystemDef& s);
Json to_json(const ScalarODE& s);
Json to_json(const PfaffianDef& s);
Json to_json(const AccessiblePoint& p);
Json to_json(const LocalIndex& idx);
Json to_json(const LaurentSolution& sol);

std::string pretty_field(const SystemDef& s); // human-readable mirrors

}  // namespace chazy
