#pragma once

#include <string>
#include <vector>

#include "stanley/caps.hpp"
#include "stanley/field.hpp"

namespace stanley {

struct GoldenResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Curated fixtures with exact expected values: invariant profiles, level
// compression, polarization shapes, depth and Stanley depth of small
// factors, and the implication checkers on them. Every expectation is an
// exact integer or structural match.
std::vector<GoldenResult> run_golden_suite(const FieldSpec& field = {},
                                           const EngineCaps& caps = {});

}  // namespace stanley
