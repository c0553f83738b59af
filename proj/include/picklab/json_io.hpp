#pragma once

#include <json.hpp>

#include "picklab/integrate.hpp"
#include "picklab/measure.hpp"
#include "picklab/nevanlinna.hpp"
#include "picklab/rate.hpp"
#include "picklab/regularity.hpp"

namespace picklab {

using Json = nlohmann::json;

// {"atoms":[{"t":0.5,"w":1.0}],
//  "densities":[{"form":"power","center":0.0,"c":1.0,"p":2.0,"support":[-1.0,1.0]}]}
Measure measure_from_json(const Json& j);
Json measure_to_json(const Measure& m);

// {"form":"power","c":1.0,"p":2.0} | {"form":"expinv","k":1.0}
// | {"form":"powerlog","c":1.0,"p":2.0,"q":1.0}
// | {"form":"scale","s":2.0,"inner":{...}} | {"form":"min","left":{...},"right":{...}}
RateFunction rate_from_json(const Json& j);

// {"a":0.0,"b":0.0,"mu":{...}}
NevanlinnaRep rep_from_json(const Json& j);
Json rep_to_json(const NevanlinnaRep& rep);

Json verdict_to_json(const IntegrabilityVerdict& v);
Json report_to_json(const RegularityReport& r);

}  // namespace picklab
