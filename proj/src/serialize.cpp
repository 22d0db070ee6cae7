#include "stanley/serialize.hpp"

namespace stanley {

Json json_of(const PolarizationMap& map) {
    Json slots = Json::object();
    for (int i = 0; i < map.source_n; ++i)
        slots[std::to_string(i + 1)] = map.slots[i];
    return Json{{"source_n", map.source_n},
                {"target_n", map.target_n},
                {"slots", std::move(slots)}};
}

Json json_of(const IntervalPartition& partition) {
    Json intervals = Json::array();
    for (const auto& [c, d] : partition.intervals)
        intervals.push_back(Json::array(
            {to_text(Monomial(c)), to_text(Monomial(d))}));
    return Json{{"rho_min", partition.rho_min}, {"intervals", std::move(intervals)}};
}

Json json_of(const CheckOutcome& outcome) {
    Json q = Json::object();
    for (const auto& [name, value] : outcome.quantities) q[name] = value;
    Json j{{"check_id", outcome.check_id},
           {"hypothesis_held", outcome.hypothesis_held}};
    if (outcome.conclusion_held.has_value())
        j["conclusion_held"] = *outcome.conclusion_held;
    if (outcome.unknown) j["unknown"] = true;
    j["witness"] = outcome.witness;
    j["quantities"] = std::move(q);
    return j;
}

Json instance_report(const InstanceAnalysis& a, const std::vector<CheckOutcome>& checks) {
    auto value_or_null = [](const EngineValue& v) -> Json {
        if (!v.known()) return nullptr;
        return *v.value;
    };

    Json j;
    j["input"] = Json{{"I", to_text(a.factor.ideal_I)}, {"J", to_text(a.factor.ideal_J)}};
    j["n"] = a.factor.ambient_n();
    j["field"] = a.field.characteristic;
    j["e"] = Json{{"per_var", a.invariants.e_per_var}, {"total", a.invariants.e_total}};
    j["d"] = a.invariants.d_min;
    j["t"] = a.invariants.index_t;
    j["r_prime"] = a.canonical_invariants.r_count;
    j["depth"] = value_or_null(a.depth_factor);
    j["sdepth"] = value_or_null(a.sdepth_factor);
    if (a.sdepth_witness.has_value())
        j["witness"] = json_of(*a.sdepth_witness);
    else
        j["witness"] = nullptr;

    Json cs = Json::array();
    for (const CheckOutcome& c : checks) cs.push_back(json_of(c));
    j["checks"] = std::move(cs);
    return j;
}

}  // namespace stanley
