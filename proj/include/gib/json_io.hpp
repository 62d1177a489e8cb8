#pragma once

#include <json.hpp>

#include "gib/classify.hpp"
#include "gib/construct.hpp"
#include "gib/equations.hpp"
#include "gib/harness.hpp"

namespace gib {

using Json = nlohmann::ordered_json;

// malformed documents carry the offending field for the usage diagnostic
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& field, const std::string& why)
        : std::runtime_error("field '" + field + "': " + why) {}
};

Json to_json(const Rat& x);
Json to_json(const QuadElem& x);
Json to_json(const PolyQ& p);
Json to_json(const MatZ& m);
Json to_json(const MatQ& m);
Json to_json(const MatK& m);
Json to_json(const IntervalQ& iv);
Json to_json(const RealAlgebraic& x);
Json to_json(const GibData& data);
Json to_json(const ValidationReport& rep);
Json to_json(const AutReport& rep);
Json to_json(const EquationSet& eqs);
Json to_json(const FundBundle& bundle);
Json to_json(const SopqBundle& bundle);
Json to_json(const ClassificationReport& rep);
Json to_json(const CheckReport& rep);

Rat rat_from_json(const Json& j, const std::string& field);
QuadElem quad_from_json(const Json& j, const std::string& field, long ambient_d);
MatZ matz_from_json(const Json& j, const std::string& field);
MatK matk_from_json(const Json& j, const std::string& field, long ambient_d);
GibData gibdata_from_json(const Json& j);
EquationSet equations_from_json(const Json& j);
std::vector<MatZ> generators_from_json(const Json& j);

}  // namespace gib
