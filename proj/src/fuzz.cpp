#include "stanley/fuzz.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

Monomial random_monomial(SplitMix64& rng, int n, int exponent_max) {
    std::vector<int> exps(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) {
            // Half the coordinates vanish on average; sparse generators
            // keep the ideals interesting.
            exps[i] = rng.below(2) == 0
                          ? 0
                          : 1 + static_cast<int>(rng.below(
                                    static_cast<std::uint64_t>(exponent_max)));
        }
        bool unit = true;
        for (int e : exps)
            if (e) unit = false;
        if (!unit) return Monomial(exps);
    }
}

}  // namespace

FactorModule random_factor(SplitMix64& rng, const FuzzConfig& config) {
    while (true) {
        const int n =
            config.n_max <= 1
                ? 1
                : 2 + static_cast<int>(rng.below(
                          static_cast<std::uint64_t>(config.n_max - 1)));

        std::vector<Monomial> gens_I;
        const int r = 1 + static_cast<int>(rng.below(config.gen_count_max));
        for (int i = 0; i < r; ++i)
            gens_I.push_back(random_monomial(rng, n, config.exponent_max));
        MonomialIdeal ideal_I = minimalize(std::move(gens_I), n);

        MonomialIdeal ideal_J{n, {}};
        if (rng.below(5) != 0) {  // J = 0 one time in five
            std::vector<Monomial> gens_J;
            const int s = 1 + static_cast<int>(rng.below(config.gen_count_max));
            for (int j = 0; j < s; ++j) {
                const Monomial& base =
                    ideal_I.gens[rng.below(ideal_I.gens.size())];
                Monomial v = base;
                for (int i = 0; i < n; ++i) {
                    const int room = config.exponent_max - v.exps[i];
                    if (room > 0 && rng.below(2) == 0)
                        v.exps[i] += 1 + static_cast<int>(rng.below(room));
                }
                gens_J.push_back(std::move(v));
            }
            ideal_J = minimalize(std::move(gens_J), n);
        }

        try {
            return make_factor(std::move(ideal_I), std::move(ideal_J));
        } catch (const FactorError&) {
            // J swallowed I (or some draw degenerated); redraw from the
            // same stream so the sequence stays reproducible.
        }
    }
}

}  // namespace stanley
