#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stanley/caps.hpp"
#include "stanley/monomial.hpp"

namespace stanley {

// The finite divisibility poset attached to a factor: all multidegrees a
// with 0 <= a <= g and x^a in I \ J, where g bounds the exponents of
// G(I) ∪ G(J) componentwise. Stanley depth is computed from interval
// partitions of this poset. Points are kept sorted by (degree, lex), a
// linear extension of the partial order.
struct FactorPoset {
    int n = 0;
    std::vector<int> g;
    std::vector<std::vector<int>> points;

    // Number of coordinates of d sitting at the bound g; the dimension an
    // interval topped by d contributes.
    int rho(const std::vector<int>& d) const;
};

FactorPoset build_poset(const FactorModule& f, const EngineCaps& caps = {});

// Same poset under a caller-chosen bound (componentwise >= the lcm bound);
// the computed Stanley depth must not depend on this choice.
FactorPoset build_poset_with_bound(const FactorModule& f, std::vector<int> g,
                                   const EngineCaps& caps = {});

// A family of intervals [c, d] partitioning the poset points, with the
// minimum rho over interval tops.
struct IntervalPartition {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> intervals;
    int rho_min = 0;
};

enum class DecisionStatus {
    Found,    // a partition with rho_min >= k exists (witness attached)
    None,     // exhaustive search proved none exists
    Unknown,  // node budget exhausted before either answer
};

struct DecisionResult {
    DecisionStatus status = DecisionStatus::None;
    std::optional<IntervalPartition> partition;
    long long nodes = 0;
};

// Exact decision: is there an interval partition whose tops all have
// rho >= k? The search is complete; Unknown is reported instead of ever
// degrading to a heuristic answer.
DecisionResult sdepth_decision(const FactorPoset& poset, int k,
                               const EngineCaps& caps = {});

struct SdepthResult {
    int value = 0;
    IntervalPartition witness;
    bool exact = true;  // false if a higher k ended in Unknown
    long long nodes = 0;
};

SdepthResult sdepth(const FactorModule& f, const EngineCaps& caps = {});
SdepthResult sdepth_of_poset(const FactorPoset& poset, const EngineCaps& caps = {});

// Exhaustive maximum of rho_min over all interval partitions, memoized over
// covered subsets. Only for small posets.
int sdepth_bruteforce(const FactorPoset& poset, const EngineCaps& caps = {});

struct PartitionCheck {
    bool ok = true;
    std::string first_violation;
};

PartitionCheck validate_partition(const FactorPoset& poset,
                                  const IntervalPartition& partition);

}  // namespace stanley
