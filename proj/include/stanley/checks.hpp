#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stanley/betti.hpp"
#include "stanley/caps.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/transforms.hpp"

namespace stanley {

// Result of one verification check on one instance. The conclusion is only
// present when the hypothesis held; `unknown` marks instances a resource
// cap prevented from being decided, which aggregate statistics must count
// as skipped rather than passed.
struct CheckOutcome {
    std::string check_id;
    bool hypothesis_held = false;
    std::optional<bool> conclusion_held;
    bool unknown = false;
    std::string witness;
    std::map<std::string, long long> quantities;

    bool failed() const {
        return hypothesis_held && conclusion_held.has_value() && !*conclusion_held;
    }
};

// An exact engine value, or nothing when caps stopped the computation.
struct EngineValue {
    std::optional<int> value;
    std::string engine;

    bool known() const { return value.has_value(); }
};

// Everything the checkers need about one factor, computed once. Depth is
// taken from the Koszul route when the box fits the caps and from the
// resolution route otherwise; the two routes are cross-validated separately.
struct InstanceAnalysis {
    FactorModule factor;
    FieldSpec field;
    EngineCaps caps;

    InvariantReport invariants;
    FactorModule canonical;
    InvariantReport canonical_invariants;
    FactorModule polarized;
    PolarizationMap polarization;

    EngineValue depth_factor;
    EngineValue sdepth_factor;
    EngineValue depth_polarized;
    EngineValue sdepth_polarized;
    EngineValue depth_canonical;
    EngineValue sdepth_canonical;
    std::optional<IntervalPartition> sdepth_witness;

    std::string describe() const;  // one-line instance serialization
};

InstanceAnalysis analyze_instance(const FactorModule& f, const FieldSpec& field = {},
                                  const EngineCaps& caps = {});

EngineValue depth_best_engine(const FactorModule& f, const FieldSpec& field,
                              const EngineCaps& caps);

// Reported inequality depth <= sdepth. Never asserted: a counterexample is
// recorded with a full witness instead of stopping a run.
CheckOutcome check_stanley_inequality(const InstanceAnalysis& a);

// sdepth - depth is unchanged by complete polarization.
CheckOutcome check_polarization_gap(const InstanceAnalysis& a);

// depth and sdepth are unchanged by the canonical form.
CheckOutcome check_canonical_invariance(const InstanceAnalysis& a);

// depth >= d - e and sdepth >= d - e on the given presentation.
CheckOutcome check_degree_gap_bound(const InstanceAnalysis& a);

// depth >= t and sdepth >= t.
CheckOutcome check_index_bound(const InstanceAnalysis& a);

// If sdepth = t + 1 and the canonical form has at most 4 minimal generators
// of least degree (or exactly 5 plus a support condition on a variable
// outside them), then depth <= t + 1.
CheckOutcome check_depth_bound_at_index_succ(const InstanceAnalysis& a);

// If sdepth = t then depth = t.
CheckOutcome check_sdepth_at_index_forces_depth(const InstanceAnalysis& a);

// Squarefree factor whose I is generated by six distinct variables with
// sdepth 2 has depth <= 2; canonical-form variant bounds depth by t + 1.
CheckOutcome check_six_variable_squarefree(const InstanceAnalysis& a);
CheckOutcome check_six_variable_canonical(const InstanceAnalysis& a);

// Reported squarefree case: sdepth = d + 1 implies depth <= d + 1.
CheckOutcome check_squarefree_succ_bound(const InstanceAnalysis& a);

// Cross-validation of the two Betti routes and of the partition search
// against the exhaustive reference, where caps allow.
CheckOutcome check_betti_engine_agreement(const InstanceAnalysis& a);
CheckOutcome check_sdepth_brute_agreement(const InstanceAnalysis& a);

std::vector<CheckOutcome> run_battery(const InstanceAnalysis& a);

}  // namespace stanley
