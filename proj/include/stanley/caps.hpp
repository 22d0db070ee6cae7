#pragma once

#include <cstdint>

namespace stanley {

// Resource limits for the exact engines. Exceeding a cap raises
// ResourceCapError (or yields an explicit Unknown result in the partition
// search); it never silently degrades a result.
struct EngineCaps {
    int koszul_n_max = 10;                    // Koszul pieces scale as 2^n per multidegree
    long long box_volume_max = 200000;        // multidegree box volume
    int taylor_gens_max = 12;                 // |G(I)| + |G(J)| for the resolution route
    int brute_points_max = 12;                // poset size for exhaustive partition search
    long long sdepth_node_budget = 20000000;  // search nodes before reporting Unknown
};

}  // namespace stanley
