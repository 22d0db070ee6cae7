#include "stanley/checks.hpp"

#include <algorithm>

#include "stanley/errors.hpp"
#include "stanley/taylor.hpp"

namespace stanley {

namespace {

EngineValue sdepth_engine(const FactorModule& f, const EngineCaps& caps) {
    try {
        const SdepthResult r = sdepth(f, caps);
        if (!r.exact) return {};
        return {r.value, "search"};
    } catch (const ResourceCapError&) {
        return {};
    }
}

CheckOutcome base_outcome(const InstanceAnalysis& a, std::string id) {
    CheckOutcome out;
    out.check_id = std::move(id);
    out.witness = a.describe();
    out.quantities["d_min"] = a.invariants.d_min;
    out.quantities["e_total"] = a.invariants.e_total;
    out.quantities["t"] = a.invariants.index_t;
    out.quantities["d_prime"] = a.canonical_invariants.d_min;
    out.quantities["e_prime"] = a.canonical_invariants.e_total;
    out.quantities["r_prime"] = a.canonical_invariants.r_count;
    if (a.depth_factor.known()) out.quantities["depth"] = *a.depth_factor.value;
    if (a.sdepth_factor.known()) out.quantities["sdepth"] = *a.sdepth_factor.value;
    return out;
}

CheckOutcome unknown_outcome(CheckOutcome out) {
    out.unknown = true;
    out.hypothesis_held = false;
    out.conclusion_held.reset();
    return out;
}

// Generators of the canonical form's I of minimal degree (the f_i) and the
// higher-degree rest (the set E').
struct CanonicalSplit {
    std::vector<Monomial> least;
    std::vector<Monomial> rest;
};

CanonicalSplit split_canonical_generators(const InstanceAnalysis& a) {
    CanonicalSplit s;
    for (const Monomial& g : a.canonical.ideal_I.gens) {
        if (g.degree() == a.canonical_invariants.d_min)
            s.least.push_back(g);
        else
            s.rest.push_back(g);
    }
    return s;
}

// Is there a variable j missed by all least-degree generators such that
// every member of E' is divisible by x_j and some degree-(d'+1) monomial of
// the factor outside E' is too?
bool support_condition_holds(const InstanceAnalysis& a, const CanonicalSplit& split) {
    const int n = a.canonical.ambient_n();
    for (int j = 0; j < n; ++j) {
        bool touched = false;
        for (const Monomial& f : split.least)
            if (f.exps[j] > 0) {
                touched = true;
                break;
            }
        if (touched) continue;

        bool rest_inside = true;
        for (const Monomial& g : split.rest)
            if (g.exps[j] == 0) {
                rest_inside = false;
                break;
            }
        if (!rest_inside) continue;

        for (const Monomial& b : a.canonical_invariants.b_set) {
            if (b.exps[j] == 0) continue;
            if (std::find(split.rest.begin(), split.rest.end(), b) == split.rest.end())
                return true;
        }
    }
    return false;
}

bool generated_by_six_variables(const MonomialIdeal& ideal) {
    if (ideal.gens.size() != 6) return false;
    for (const Monomial& g : ideal.gens)
        if (g.degree() != 1) return false;
    return true;  // minimal generators are distinct, so the variables are too
}

}  // namespace

std::string InstanceAnalysis::describe() const {
    return "n=" + std::to_string(factor.ambient_n()) +
           " field=" + std::to_string(field.characteristic) +
           " I=(" + to_text(factor.ideal_I) + ") J=(" + to_text(factor.ideal_J) + ")";
}

EngineValue depth_best_engine(const FactorModule& f, const FieldSpec& field,
                              const EngineCaps& caps) {
    // Koszul work grows like box volume times 2^n, the resolution route
    // like 4^(generator count); pick the cheaper-looking one first, fall
    // back to the other on a cap.
    long long work = 1;
    for (int g : exponent_bounds(f)) {
        work *= g + 1;
        if (work > (1LL << 40)) break;
    }
    for (int i = 0; i < f.ambient_n() && work <= (1LL << 40); ++i) work *= 2;
    const bool koszul_first = work <= (1LL << 20);

    for (int attempt = 0; attempt < 2; ++attempt) {
        const bool use_koszul = koszul_first == (attempt == 0);
        try {
            if (use_koszul) return {betti_table(f, field, caps).depth, "koszul"};
            return {taylor_oracle(f, field, caps).depth, "taylor"};
        } catch (const ResourceCapError&) {
        }
    }
    return {};
}

InstanceAnalysis analyze_instance(const FactorModule& f, const FieldSpec& field,
                                  const EngineCaps& caps) {
    InstanceAnalysis a;
    a.factor = f;
    a.field = field;
    a.caps = caps;

    a.invariants = compute_invariants(f);
    a.canonical = canonical_form(f);
    a.canonical_invariants = compute_invariants(a.canonical);
    auto [polarized, pmap] = polarize(f);
    a.polarized = std::move(polarized);
    a.polarization = std::move(pmap);

    a.depth_factor = depth_best_engine(f, field, caps);
    a.depth_canonical = depth_best_engine(a.canonical, field, caps);
    a.depth_polarized = depth_best_engine(a.polarized, field, caps);

    a.sdepth_factor = {};
    try {
        const SdepthResult r = sdepth(f, caps);
        if (r.exact) {
            a.sdepth_factor = {r.value, "search"};
            a.sdepth_witness = r.witness;
        }
    } catch (const ResourceCapError&) {
    }
    a.sdepth_canonical = sdepth_engine(a.canonical, caps);
    a.sdepth_polarized = sdepth_engine(a.polarized, caps);
    return a;
}

CheckOutcome check_stanley_inequality(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "stanley_inequality");
    if (!a.depth_factor.known() || !a.sdepth_factor.known())
        return unknown_outcome(std::move(out));
    out.hypothesis_held = true;
    out.conclusion_held = *a.depth_factor.value <= *a.sdepth_factor.value;
    return out;
}

CheckOutcome check_polarization_gap(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "polarization_gap_invariance");
    if (!a.depth_factor.known() || !a.sdepth_factor.known() ||
        !a.depth_polarized.known() || !a.sdepth_polarized.known())
        return unknown_outcome(std::move(out));
    out.quantities["depth_polarized"] = *a.depth_polarized.value;
    out.quantities["sdepth_polarized"] = *a.sdepth_polarized.value;
    out.hypothesis_held = true;
    out.conclusion_held =
        (*a.sdepth_factor.value - *a.depth_factor.value) ==
        (*a.sdepth_polarized.value - *a.depth_polarized.value);
    return out;
}

CheckOutcome check_canonical_invariance(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "canonical_form_invariance");
    if (!a.depth_factor.known() || !a.sdepth_factor.known() ||
        !a.depth_canonical.known() || !a.sdepth_canonical.known())
        return unknown_outcome(std::move(out));
    out.quantities["depth_canonical"] = *a.depth_canonical.value;
    out.quantities["sdepth_canonical"] = *a.sdepth_canonical.value;
    out.hypothesis_held = true;
    out.conclusion_held = *a.depth_canonical.value == *a.depth_factor.value &&
                          *a.sdepth_canonical.value == *a.sdepth_factor.value;
    return out;
}

CheckOutcome check_degree_gap_bound(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "degree_gap_lower_bound");
    if (!a.depth_factor.known() || !a.sdepth_factor.known())
        return unknown_outcome(std::move(out));
    const int gap = a.invariants.d_min - a.invariants.e_total;
    out.hypothesis_held = true;
    out.conclusion_held =
        *a.depth_factor.value >= gap && *a.sdepth_factor.value >= gap;
    return out;
}

CheckOutcome check_index_bound(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "index_lower_bound");
    if (!a.depth_factor.known() || !a.sdepth_factor.known())
        return unknown_outcome(std::move(out));
    const int t = a.invariants.index_t;
    out.hypothesis_held = true;
    out.conclusion_held = *a.depth_factor.value >= t && *a.sdepth_factor.value >= t;
    return out;
}

CheckOutcome check_depth_bound_at_index_succ(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "depth_bound_at_index_plus_one");
    if (!a.depth_factor.known() || !a.sdepth_factor.known())
        return unknown_outcome(std::move(out));

    const int t = a.invariants.index_t;
    const int r_prime = a.canonical_invariants.r_count;
    bool shape_ok = r_prime <= 4;
    if (!shape_ok && r_prime == 5)
        shape_ok = support_condition_holds(a, split_canonical_generators(a));

    out.hypothesis_held = (*a.sdepth_factor.value == t + 1) && shape_ok;
    if (out.hypothesis_held) out.conclusion_held = *a.depth_factor.value <= t + 1;
    return out;
}

CheckOutcome check_sdepth_at_index_forces_depth(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "sdepth_at_index_forces_depth");
    if (!a.depth_factor.known() || !a.sdepth_factor.known())
        return unknown_outcome(std::move(out));
    const int t = a.invariants.index_t;
    out.hypothesis_held = *a.sdepth_factor.value == t;
    if (out.hypothesis_held) out.conclusion_held = *a.depth_factor.value == t;
    return out;
}

CheckOutcome check_six_variable_squarefree(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "six_variable_squarefree_bound");
    if (!a.depth_factor.known() || !a.sdepth_factor.known())
        return unknown_outcome(std::move(out));
    out.hypothesis_held = a.factor.is_squarefree() &&
                          generated_by_six_variables(a.factor.ideal_I) &&
                          *a.sdepth_factor.value == 2;
    if (out.hypothesis_held) out.conclusion_held = *a.depth_factor.value <= 2;
    return out;
}

CheckOutcome check_six_variable_canonical(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "six_variable_canonical_bound");
    if (!a.depth_factor.known() || !a.sdepth_factor.known())
        return unknown_outcome(std::move(out));
    const int t = a.invariants.index_t;
    out.hypothesis_held = generated_by_six_variables(a.canonical.ideal_I) &&
                          *a.sdepth_factor.value == t + 1;
    if (out.hypothesis_held) out.conclusion_held = *a.depth_factor.value <= t + 1;
    return out;
}

CheckOutcome check_squarefree_succ_bound(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "squarefree_depth_bound_at_d_plus_one");
    if (!a.depth_factor.known() || !a.sdepth_factor.known())
        return unknown_outcome(std::move(out));
    const int d = a.invariants.d_min;
    out.hypothesis_held =
        a.factor.is_squarefree() && *a.sdepth_factor.value == d + 1;
    if (out.hypothesis_held) out.conclusion_held = *a.depth_factor.value <= d + 1;
    return out;
}

CheckOutcome check_betti_engine_agreement(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "betti_engine_agreement");
    try {
        const BettiTable koszul = betti_table(a.factor, a.field, a.caps);
        const BettiTable taylor = taylor_oracle(a.factor, a.field, a.caps);
        out.hypothesis_held = true;
        out.conclusion_held = koszul.same_entries(taylor) &&
                              koszul.pd == taylor.pd && koszul.depth == taylor.depth;
    } catch (const ResourceCapError&) {
        return unknown_outcome(std::move(out));
    }
    return out;
}

CheckOutcome check_sdepth_brute_agreement(const InstanceAnalysis& a) {
    CheckOutcome out = base_outcome(a, "sdepth_brute_agreement");
    if (!a.sdepth_factor.known()) return unknown_outcome(std::move(out));
    try {
        const FactorPoset poset = build_poset(a.factor, a.caps);
        if (static_cast<int>(poset.points.size()) > a.caps.brute_points_max)
            return unknown_outcome(std::move(out));
        const int brute = sdepth_bruteforce(poset, a.caps);
        out.quantities["sdepth_bruteforce"] = brute;
        out.hypothesis_held = true;
        out.conclusion_held = brute == *a.sdepth_factor.value;
    } catch (const ResourceCapError&) {
        return unknown_outcome(std::move(out));
    }
    return out;
}

std::vector<CheckOutcome> run_battery(const InstanceAnalysis& a) {
    return {
        check_stanley_inequality(a),
        check_polarization_gap(a),
        check_canonical_invariance(a),
        check_degree_gap_bound(a),
        check_index_bound(a),
        check_depth_bound_at_index_succ(a),
        check_sdepth_at_index_forces_depth(a),
        check_six_variable_squarefree(a),
        check_six_variable_canonical(a),
        check_squarefree_succ_bound(a),
        check_betti_engine_agreement(a),
        check_sdepth_brute_agreement(a),
    };
}

}  // namespace stanley
