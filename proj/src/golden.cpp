#include "stanley/golden.hpp"

#include <sstream>

#include "stanley/checks.hpp"
#include "stanley/parse.hpp"
#include "stanley/taylor.hpp"

namespace stanley {

namespace {

struct Recorder {
    std::vector<GoldenResult> results;
    GoldenResult* current = nullptr;

    void begin(const std::string& name) {
        results.push_back({name, true, ""});
        current = &results.back();
    }

    template <typename T>
    void expect_eq(const std::string& what, const T& got, const T& want) {
        if (got == want) return;
        current->pass = false;
        std::ostringstream os;
        if (!current->detail.empty()) os << current->detail << "; ";
        os << what << " mismatch";
        current->detail = os.str();
    }

    void expect(const std::string& what, bool ok) {
        if (ok) return;
        current->pass = false;
        if (!current->detail.empty()) current->detail += "; ";
        current->detail += what;
    }
};

std::vector<std::vector<int>> point_list(const FactorPoset& poset) {
    return poset.points;
}

}  // namespace

std::vector<GoldenResult> run_golden_suite(const FieldSpec& field,
                                           const EngineCaps& caps) {
    Recorder rec;

    {
        rec.begin("exponent-profile");
        const FactorModule f = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2", "0", 3);
        const InvariantReport inv = compute_invariants(f);
        rec.expect_eq("e_per_var", inv.e_per_var, std::vector<int>{10, 4, 5});
        rec.expect_eq("e_total", inv.e_total, 16);
        rec.expect_eq("d_min", inv.d_min, 12);
        rec.expect_eq("index_t", inv.index_t, 1);
        rec.expect_eq("type(x1)", type_with_respect_to(f, 1), std::vector<int>{3, 10});
        rec.expect_eq("type(x2)", type_with_respect_to(f, 2), std::vector<int>{2, 4});
        rec.expect_eq("type(x3)", type_with_respect_to(f, 3), std::vector<int>{5});
    }

    {
        rec.begin("level-compression");
        const FactorModule f = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2", "0", 3);
        const FactorModule c = canonical_form(f);
        rec.expect_eq("canonical", c, parse_factor("x1*x2^2*x3, x1^2*x2", "0", 3));
        const InvariantReport inv = compute_invariants(c);
        rec.expect_eq("d_prime", inv.d_min, 3);
        rec.expect_eq("e_prime", inv.e_total, 2);
        rec.expect_eq("index_t", inv.index_t, 1);
    }

    {
        rec.begin("compression-grows-generator-count");
        const FactorModule f = parse_factor("x1^3*x2^4, x1^11*x2", "0", 2);
        const FactorModule c = canonical_form(f);
        rec.expect_eq("canonical", c, parse_factor("x1*x2^2, x1^2*x2", "0", 2));
        rec.expect_eq("generators", c.ideal_I.gens.size(), std::size_t{2});
    }

    {
        rec.begin("principal-with-truncated-tail");
        const FactorModule f = parse_factor("x1", "x1*x2^2", 2);
        const InstanceAnalysis a = analyze_instance(f, field, caps);
        rec.expect_eq("e_total", a.invariants.e_total, 1);
        rec.expect_eq("index_t", a.invariants.index_t, 0);
        rec.expect_eq("polarized", a.polarized, parse_factor("x1", "x1*x2*x3", 3));
        rec.expect("depth known", a.depth_factor.known());
        rec.expect("sdepth known", a.sdepth_factor.known());
        if (a.depth_factor.known()) rec.expect_eq("depth", *a.depth_factor.value, 1);
        if (a.sdepth_factor.known()) rec.expect_eq("sdepth", *a.sdepth_factor.value, 1);
        const CheckOutcome succ = check_depth_bound_at_index_succ(a);
        rec.expect("index-succ hypothesis", succ.hypothesis_held);
        rec.expect("index-succ conclusion",
                   succ.conclusion_held.value_or(false));
        rec.expect("at-index hypothesis off",
                   !check_sdepth_at_index_forces_depth(a).hypothesis_held);
        const FactorPoset poset = build_poset(f, caps);
        rec.expect_eq("poset", point_list(poset),
                      std::vector<std::vector<int>>{{1, 0}, {1, 1}});
    }

    {
        rec.begin("two-sided-socle-pinch");
        const FactorModule f = parse_factor("x2", "x1^2*x2, x1*x2^2", 2);
        const InstanceAnalysis a = analyze_instance(f, field, caps);
        rec.expect_eq("e_total", a.invariants.e_total, 2);
        rec.expect_eq("index_t", a.invariants.index_t, 0);
        rec.expect_eq("polarized", a.polarized,
                      parse_factor("x2", "x1*x2*x3, x1*x2*x4", 4));
        if (a.depth_factor.known()) rec.expect_eq("depth", *a.depth_factor.value, 0);
        if (a.sdepth_factor.known()) rec.expect_eq("sdepth", *a.sdepth_factor.value, 0);
        const CheckOutcome at_index = check_sdepth_at_index_forces_depth(a);
        rec.expect("at-index hypothesis", at_index.hypothesis_held);
        rec.expect("at-index conclusion", at_index.conclusion_held.value_or(false));
        rec.expect("index-succ hypothesis off",
                   !check_depth_bound_at_index_succ(a).hypothesis_held);
        const FactorPoset poset = build_poset(f, caps);
        rec.expect_eq("poset", point_list(poset),
                      std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 1}});
    }

    {
        rec.begin("six-variables-with-pinched-corner");
        const FactorModule f = parse_factor(
            "x1, x2, x3, x4, x5, x6",
            "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x7", 7);
        const InstanceAnalysis a = analyze_instance(f, field, caps);
        rec.expect_eq("index_t", a.invariants.index_t, 0);
        rec.expect("sdepth known", a.sdepth_factor.known());
        if (a.sdepth_factor.known())
            rec.expect("sdepth at most 1", *a.sdepth_factor.value <= 1);
        rec.expect("depth known", a.depth_factor.known());
        if (a.depth_factor.known())
            rec.expect("depth at most 1", *a.depth_factor.value <= 1);
        const CheckOutcome six = check_six_variable_canonical(a);
        rec.expect("six-variable hypothesis", six.hypothesis_held);
        rec.expect("six-variable conclusion", six.conclusion_held.value_or(false));
    }

    {
        rec.begin("maximal-ideal-three-variables");
        const FactorModule f = parse_factor("x1, x2, x3", "0", 3);
        const SdepthResult s = sdepth(f, caps);
        rec.expect_eq("sdepth", s.value, 2);
        rec.expect("witness valid",
                   validate_partition(build_poset(f, caps), s.witness).ok);
        rec.expect_eq("bruteforce", sdepth_bruteforce(build_poset(f, caps), caps), 2);
        const BettiTable koszul = betti_table(f, field, caps);
        rec.expect_eq("depth", koszul.depth, 1);
        rec.expect("routes agree", koszul.same_entries(taylor_oracle(f, field, caps)));
    }

    return rec.results;
}

}  // namespace stanley
