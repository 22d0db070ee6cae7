#pragma once

#include <json.hpp>

#include "stanley/checks.hpp"

namespace stanley {

// All emitted JSON uses ordered objects and integer values only, so that a
// fixed invocation produces byte-identical report files.
using Json = nlohmann::ordered_json;

Json json_of(const PolarizationMap& map);
Json json_of(const IntervalPartition& partition);
Json json_of(const CheckOutcome& outcome);

// The per-instance report object: keys input, n, field, e, d, t, r_prime,
// depth, sdepth, witness, checks. Unknown engine values serialize as null.
Json instance_report(const InstanceAnalysis& a, const std::vector<CheckOutcome>& checks);

}  // namespace stanley
