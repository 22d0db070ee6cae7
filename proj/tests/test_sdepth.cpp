#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stanley/errors.hpp"
#include "stanley/fuzz.hpp"
#include "stanley/parse.hpp"
#include "stanley/sdepth.hpp"

using namespace stanley;

namespace {

FactorModule small_random_factor(SplitMix64& rng) {
    FuzzConfig config;
    config.n_max = 3;
    config.exponent_max = 2;
    config.gen_count_max = 3;
    return random_factor(rng, config);
}

}  // namespace

TEST_CASE("poset enumeration") {
    const FactorPoset a = build_poset(parse_factor("x1", "x1*x2^2", 2));
    CHECK(a.g == std::vector<int>{1, 2});
    CHECK(a.points == std::vector<std::vector<int>>{{1, 0}, {1, 1}});

    const FactorPoset b = build_poset(parse_factor("x2", "x1^2*x2, x1*x2^2", 2));
    CHECK(b.points == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 1}});

    const FactorPoset c = build_poset(parse_factor("x1", "0", 1));
    CHECK(c.points == std::vector<std::vector<int>>{{1}});
    CHECK(c.rho({1}) == 1);
}

TEST_CASE("decision procedure on the fixtures") {
    const FactorPoset a = build_poset(parse_factor("x1", "x1*x2^2", 2));
    const DecisionResult found = sdepth_decision(a, 1);
    REQUIRE(found.status == DecisionStatus::Found);
    CHECK(validate_partition(a, *found.partition).ok);
    CHECK(found.partition->rho_min >= 1);

    CHECK(sdepth_decision(a, 2).status == DecisionStatus::None);

    const FactorPoset b = build_poset(parse_factor("x2", "x1^2*x2, x1*x2^2", 2));
    CHECK(sdepth_decision(b, 1).status == DecisionStatus::None);
    CHECK(sdepth_decision(b, 0).status == DecisionStatus::Found);
}

TEST_CASE("decision monotonicity in the target") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const FactorPoset poset = build_poset(small_random_factor(rng));
        for (int k = poset.n; k >= 1; --k)
            if (sdepth_decision(poset, k).status == DecisionStatus::Found)
                CHECK(sdepth_decision(poset, k - 1).status == DecisionStatus::Found);
    }
}

TEST_CASE("stanley depth values of the fixtures") {
    const SdepthResult a = sdepth(parse_factor("x1", "x1*x2^2", 2));
    CHECK(a.value == 1);
    CHECK(a.exact);

    const SdepthResult b = sdepth(parse_factor("x2", "x1^2*x2, x1*x2^2", 2));
    CHECK(b.value == 0);

    const SdepthResult c = sdepth(parse_factor("x1, x2, x3", "0", 3));
    CHECK(c.value == 2);

    // free modules: a single point at the bound has rho = n
    CHECK(sdepth(parse_factor("x1*x2", "0", 2)).value == 2);
    CHECK(sdepth(parse_factor("x1", "0", 3)).value == 3);
}

TEST_CASE("witnesses returned by the search always validate") {
    SplitMix64 rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        const FactorModule f = small_random_factor(rng);
        const FactorPoset poset = build_poset(f);
        const SdepthResult r = sdepth(f);
        REQUIRE(r.exact);
        const PartitionCheck check = validate_partition(poset, r.witness);
        INFO(check.first_violation);
        CHECK(check.ok);
        CHECK(r.witness.rho_min == r.value);
    }
}

TEST_CASE("partition validation rejects broken families") {
    const FactorPoset poset = build_poset(parse_factor("x1", "x1*x2^2", 2));

    IntervalPartition missing;
    missing.intervals = {{{1, 0}, {1, 0}}};
    missing.rho_min = 1;
    CHECK_FALSE(validate_partition(poset, missing).ok);

    IntervalPartition overlapping;
    overlapping.intervals = {{{1, 0}, {1, 1}}, {{1, 1}, {1, 1}}};
    overlapping.rho_min = 1;
    CHECK_FALSE(validate_partition(poset, overlapping).ok);

    IntervalPartition foreign;
    foreign.intervals = {{{1, 0}, {1, 2}}};
    foreign.rho_min = 2;
    CHECK_FALSE(validate_partition(poset, foreign).ok);

    IntervalPartition wrong_rho;
    wrong_rho.intervals = {{{1, 0}, {1, 1}}};
    wrong_rho.rho_min = 2;
    CHECK_FALSE(validate_partition(poset, wrong_rho).ok);

    const SdepthResult good = sdepth(parse_factor("x1", "x1*x2^2", 2));
    CHECK(validate_partition(poset, good.witness).ok);
}

TEST_CASE("exhaustive reference search agrees on small posets") {
    SplitMix64 rng(83);
    int compared = 0;
    for (int trial = 0; trial < 120 && compared < 60; ++trial) {
        const FactorModule f = small_random_factor(rng);
        const FactorPoset poset = build_poset(f);
        if (poset.points.size() > 12) continue;
        ++compared;
        CHECK(sdepth_bruteforce(poset) == sdepth(f).value);
    }
    CHECK(compared >= 40);

    const FactorPoset big = build_poset(parse_factor("x1, x2, x3, x4", "0", 4));
    CHECK(big.points.size() > 12);
    CHECK_THROWS_AS((void)sdepth_bruteforce(big), ResourceCapError);
}

TEST_CASE("value is stable under an enlarged bound") {
    SplitMix64 rng(89);
    for (int trial = 0; trial < 25; ++trial) {
        const FactorModule f = small_random_factor(rng);
        const int base = sdepth(f).value;
        std::vector<int> g = exponent_bounds(f);
        for (std::size_t j = 0; j < g.size(); ++j) {
            std::vector<int> enlarged = g;
            ++enlarged[j];
            const FactorPoset poset = build_poset_with_bound(f, enlarged);
            CHECK(sdepth_of_poset(poset).value == base);
        }
    }
}

TEST_CASE("node budget reports unknown instead of guessing") {
    EngineCaps caps;
    caps.sdepth_node_budget = 1;
    const FactorPoset poset = build_poset(parse_factor("x1, x2, x3", "0", 3));
    const DecisionResult r = sdepth_decision(poset, 2, caps);
    CHECK(r.status == DecisionStatus::Unknown);

    // a starved full search still returns the certified singleton floor
    const SdepthResult starved = sdepth(parse_factor("x1, x2, x3", "0", 3), caps);
    CHECK_FALSE(starved.exact);
    CHECK(starved.value == 0);
    CHECK(validate_partition(poset, starved.witness).ok);
}
