#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stanley/fuzz.hpp"
#include "stanley/parse.hpp"
#include "stanley/transforms.hpp"

using namespace stanley;

TEST_CASE("invariant profile of the deep two-generator ideal") {
    const FactorModule f = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2", "0", 3);
    const InvariantReport inv = compute_invariants(f);
    CHECK(inv.e_per_var == std::vector<int>{10, 4, 5});
    CHECK(inv.e_total == 16);
    CHECK(inv.d_min == 12);
    CHECK(inv.r_count == 2);  // both generators have total degree 12
    CHECK(inv.index_t == 1);
}

TEST_CASE("invariant profile of small mixed factors") {
    const FactorModule f = parse_factor("x1", "x1*x2^2", 2);
    const InvariantReport inv = compute_invariants(f);
    CHECK(inv.e_per_var == std::vector<int>{1, 2});
    CHECK(inv.e_total == 1);
    CHECK(inv.d_min == 1);
    CHECK(inv.index_t == 0);

    const FactorModule g = parse_factor("x2", "x1^2*x2, x1*x2^2", 2);
    const InvariantReport ginv = compute_invariants(g);
    CHECK(ginv.e_total == 2);
    CHECK(ginv.index_t == 0);
}

TEST_CASE("degree d+1 slice of the factor") {
    const FactorModule f = parse_factor("x1", "x1*x2^2", 2);
    const InvariantReport inv = compute_invariants(f);
    // degree-2 monomials in the factor: x1^2 and x1*x2
    CHECK(inv.b_set == std::vector<Monomial>{Monomial({1, 1}), Monomial({2, 0})});
}

TEST_CASE("variable types list the distinct occurring exponents") {
    const FactorModule f = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2", "0", 3);
    CHECK(type_with_respect_to(f, 1) == std::vector<int>{3, 10});
    CHECK(type_with_respect_to(f, 2) == std::vector<int>{2, 4});
    CHECK(type_with_respect_to(f, 3) == std::vector<int>{5});
    CHECK_THROWS_AS((void)type_with_respect_to(f, 4), std::out_of_range);

    const FactorModule g = parse_factor("x1", "0", 3);
    CHECK(type_with_respect_to(g, 2).empty());
}

TEST_CASE("canonical form compresses exponent levels") {
    const FactorModule f = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2", "0", 3);
    CHECK(canonical_form(f) == parse_factor("x1*x2^2*x3, x1^2*x2", "0", 3));

    const FactorModule g = parse_factor("x1^3*x2^4, x1^11*x2", "0", 2);
    const FactorModule gc = canonical_form(g);
    CHECK(gc == parse_factor("x1*x2^2, x1^2*x2", "0", 2));
    CHECK(gc.ideal_I.gens.size() == 2);
    // compression can raise the count of least-degree generators
    CHECK(compute_invariants(g).r_count == 1);
    CHECK(compute_invariants(gc).r_count == 2);

    const FactorModule sf = parse_factor("x1*x2, x2*x3", "x1*x2*x3", 3);
    CHECK(canonical_form(sf) == sf);
}

TEST_CASE("canonical form is idempotent and order-free") {
    SplitMix64 rng(23);
    FuzzConfig config;
    config.exponent_max = 5;
    for (int trial = 0; trial < 60; ++trial) {
        const FactorModule f = random_factor(rng, config);
        const FactorModule once = canonical_form(f);
        CHECK(canonical_form(once) == once);

        // One variable at a time, in both directions; all orders must land
        // on the same factor because the relabelings touch disjoint
        // coordinates.
        FactorModule ascending = f;
        for (int i = 0; i < f.ambient_n(); ++i) {
            std::vector<bool> one(f.ambient_n(), false);
            one[i] = true;
            ascending = relabel_exponent_levels(ascending, one);
        }
        FactorModule descending = f;
        for (int i = f.ambient_n(); i-- > 0;) {
            std::vector<bool> one(f.ambient_n(), false);
            one[i] = true;
            descending = relabel_exponent_levels(descending, one);
        }
        CHECK(ascending == once);
        CHECK(descending == once);
    }
}

TEST_CASE("polarization of the fixtures") {
    const FactorModule f = parse_factor("x1", "x1*x2^2", 2);
    const auto [pf, pmap] = polarize(f);
    CHECK(pmap.target_n == 3);
    CHECK(pf == parse_factor("x1", "x1*x2*x3", 3));
    CHECK(pmap.slots == std::vector<std::vector<int>>{{1}, {2, 3}});

    const FactorModule g = parse_factor("x2", "x1^2*x2, x1*x2^2", 2);
    const auto [pg, gmap] = polarize(g);
    CHECK(gmap.target_n == 4);
    CHECK(pg == parse_factor("x2", "x1*x2*x3, x1*x2*x4", 4));

    const FactorModule sf = parse_factor("x1*x2, x2*x3", "0", 3);
    const auto [psf, sfmap] = polarize(sf);
    CHECK(sfmap.target_n == 3);
    CHECK(psf == sf);
}

TEST_CASE("polarization properties on random factors") {
    SplitMix64 rng(29);
    FuzzConfig config;
    for (int trial = 0; trial < 60; ++trial) {
        const FactorModule f = random_factor(rng, config);
        const InvariantReport inv = compute_invariants(f);
        const auto [pf, pmap] = polarize(f);

        CHECK(pmap.target_n == f.ambient_n() + inv.e_total);
        CHECK(pf.is_squarefree());
        CHECK(pf.ideal_I.gens.size() == f.ideal_I.gens.size());
        CHECK(pf.ideal_J.gens.size() == f.ideal_J.gens.size());

        // degrees preserved generator by generator, and depolarization
        // recovers the source exactly
        std::vector<Monomial> back_I, back_J;
        for (const Monomial& g : pf.ideal_I.gens) back_I.push_back(pmap.depolarize_monomial(g));
        for (const Monomial& g : pf.ideal_J.gens) back_J.push_back(pmap.depolarize_monomial(g));
        CHECK(minimalize(back_I, f.ambient_n()) == f.ideal_I);
        CHECK(minimalize(back_J, f.ambient_n()) == f.ideal_J);
        for (const Monomial& g : f.ideal_I.gens)
            CHECK(pmap.polarize_monomial(g).degree() == g.degree());
        for (const Monomial& g : f.ideal_J.gens)
            CHECK(pmap.polarize_monomial(g).degree() == g.degree());
    }
}

TEST_CASE("squarefree factors have index equal to least degree") {
    SplitMix64 rng(31);
    FuzzConfig config;
    config.exponent_max = 1;
    for (int trial = 0; trial < 40; ++trial) {
        const FactorModule f = random_factor(rng, config);
        REQUIRE(f.is_squarefree());
        const InvariantReport inv = compute_invariants(f);
        CHECK(inv.index_t == inv.d_min);
        CHECK(canonical_form(f) == f);
    }
}
