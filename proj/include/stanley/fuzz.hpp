#pragma once

#include <cstdint>

#include "stanley/checks.hpp"

namespace stanley {

// Deterministic pseudo-random stream; the same seed always yields the same
// instance sequence, on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t state_;
};

struct FuzzConfig {
    std::uint64_t seed = 1;
    int instance_count = 100;
    int n_max = 4;
    int exponent_max = 3;
    int gen_count_max = 4;
    FieldSpec field;
    EngineCaps caps;
};

// Draws a valid factor: I from random monomials, J from random multiples of
// members of I (exponents stay within exponent_max), both minimalized,
// retrying while the pair fails validation.
FactorModule random_factor(SplitMix64& rng, const FuzzConfig& config);

}  // namespace stanley
