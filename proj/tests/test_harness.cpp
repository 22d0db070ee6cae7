#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "stanley/fuzz.hpp"
#include "stanley/golden.hpp"
#include "stanley/parse.hpp"
#include "stanley/serialize.hpp"

using namespace stanley;

TEST_CASE("checker outcomes on the small fixture pair") {
    const InstanceAnalysis tail = analyze_instance(parse_factor("x1", "x1*x2^2", 2));
    const CheckOutcome succ = check_depth_bound_at_index_succ(tail);
    CHECK(succ.hypothesis_held);
    REQUIRE(succ.conclusion_held.has_value());
    CHECK(*succ.conclusion_held);
    CHECK(succ.quantities.at("r_prime") == 1);
    CHECK_FALSE(check_sdepth_at_index_forces_depth(tail).hypothesis_held);

    const InstanceAnalysis pinch =
        analyze_instance(parse_factor("x2", "x1^2*x2, x1*x2^2", 2));
    const CheckOutcome at_index = check_sdepth_at_index_forces_depth(pinch);
    CHECK(at_index.hypothesis_held);
    CHECK(at_index.conclusion_held.value_or(false));
    CHECK_FALSE(check_depth_bound_at_index_succ(pinch).hypothesis_held);

    for (const InstanceAnalysis* a : {&tail, &pinch}) {
        const CheckOutcome stanley_check = check_stanley_inequality(*a);
        CHECK(stanley_check.hypothesis_held);
        CHECK(stanley_check.conclusion_held.value_or(false));
    }
}

TEST_CASE("six variable checkers") {
    const FactorModule f = parse_factor(
        "x1, x2, x3, x4, x5, x6", "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x7", 7);
    const InstanceAnalysis a = analyze_instance(f);
    const CheckOutcome canonical = check_six_variable_canonical(a);
    CHECK(canonical.hypothesis_held);
    CHECK(canonical.conclusion_held.value_or(false));
    // J is not squarefree, so the squarefree variant must not fire
    CHECK_FALSE(check_six_variable_squarefree(a).hypothesis_held);

    // sdepth of the full six-variable ideal is 3, not 2
    const InstanceAnalysis b = analyze_instance(
        parse_factor("x1, x2, x3, x4, x5, x6", "0", 6));
    REQUIRE(b.sdepth_factor.known());
    CHECK(*b.sdepth_factor.value == 3);
    CHECK_FALSE(check_six_variable_squarefree(b).hypothesis_held);
}

TEST_CASE("every battery outcome with a hypothesis has a conclusion") {
    SplitMix64 rng(97);
    FuzzConfig config;
    config.n_max = 3;
    config.exponent_max = 2;
    config.gen_count_max = 3;
    for (int trial = 0; trial < 25; ++trial) {
        const FactorModule f = random_factor(rng, config);
        const InstanceAnalysis a = analyze_instance(f, config.field, config.caps);
        for (const CheckOutcome& c : run_battery(a)) {
            CHECK(c.conclusion_held.has_value() == c.hypothesis_held);
            if (c.unknown) CHECK_FALSE(c.hypothesis_held);
            CHECK_FALSE(c.failed());
        }
    }
}

TEST_CASE("golden fixture suite passes") {
    for (const GoldenResult& r : run_golden_suite()) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("fuzz stream is deterministic") {
    FuzzConfig config;
    config.seed = 12345;
    config.instance_count = 8;

    auto render = [&config] {
        SplitMix64 rng(config.seed);
        std::ostringstream out;
        for (int i = 0; i < config.instance_count; ++i) {
            const FactorModule f = random_factor(rng, config);
            const InstanceAnalysis a = analyze_instance(f, config.field, config.caps);
            out << instance_report(a, run_battery(a)).dump() << "\n";
        }
        return out.str();
    };

    const std::string first = render();
    const std::string second = render();
    CHECK(first == second);
    CHECK(!first.empty());
}

TEST_CASE("squarefree-only stream keeps index equal to least degree") {
    FuzzConfig config;
    config.seed = 777;
    config.exponent_max = 1;
    SplitMix64 rng(config.seed);
    for (int i = 0; i < 30; ++i) {
        const FactorModule f = random_factor(rng, config);
        REQUIRE(f.is_squarefree());
        const InvariantReport inv = compute_invariants(f);
        CHECK(inv.index_t == inv.d_min);
        // least generator degree bounds both values from below here
        const InstanceAnalysis a = analyze_instance(f, config.field, config.caps);
        REQUIRE(a.depth_factor.known());
        REQUIRE(a.sdepth_factor.known());
        CHECK(*a.depth_factor.value >= inv.d_min);
        CHECK(*a.sdepth_factor.value >= inv.d_min);
    }
}

TEST_CASE("instance report carries the full key schema") {
    const InstanceAnalysis a = analyze_instance(parse_factor("x1", "x1*x2^2", 2));
    const Json j = instance_report(a, run_battery(a));
    for (const char* key :
         {"input", "n", "field", "e", "d", "t", "r_prime", "depth", "sdepth",
          "witness", "checks"})
        CHECK(j.contains(key));
    CHECK(j["n"] == 2);
    CHECK(j["depth"] == 1);
    CHECK(j["sdepth"] == 1);
    CHECK(j["t"] == 0);
    CHECK(j["e"]["total"] == 1);
    CHECK(j["checks"].is_array());
    CHECK(!j["checks"].empty());
}

TEST_CASE("polarization map serialization") {
    const auto [pf, pmap] = polarize(parse_factor("x1", "x1*x2^2", 2));
    const Json j = json_of(pmap);
    CHECK(j["source_n"] == 2);
    CHECK(j["target_n"] == 3);
    CHECK(j["slots"]["2"] == Json::array({2, 3}));
}
