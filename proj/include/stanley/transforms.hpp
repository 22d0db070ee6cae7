#pragma once

#include <utility>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

// Numeric profile of a factor I/J.
//
//   e_per_var  largest exponent of each variable over G(I) ∪ G(J)
//   e_total    Σ (e_i − 1) over variables with e_i > 0; the number of fresh
//              variables a complete polarization introduces
//   d_min      smallest total degree among the generators of I
//   r_count    how many generators of I have degree exactly d_min
//   index_t    max(d' − e', 0) on the compressed form (see below); a common
//              lower bound for depth and Stanley depth
//   b_set      the monomials of degree d_min + 1 inside I \ J, enumerated
//              with each exponent capped at e_i + 1
struct InvariantReport {
    std::vector<int> e_per_var;
    int e_total = 0;
    int d_min = 0;
    int r_count = 0;
    int index_t = 0;
    std::vector<Monomial> b_set;
};

// Records how polarization renamed variables: slot list i holds the target
// variables (1-based) that successive powers of source variable i+1 map to.
// The first slot is always the source variable itself; the rest are fresh
// variables appended after the original ones, grouped by source variable.
struct PolarizationMap {
    int source_n = 0;
    int target_n = 0;
    std::vector<std::vector<int>> slots;

    Monomial polarize_monomial(const Monomial& u) const;
    Monomial depolarize_monomial(const Monomial& u) const;
};

InvariantReport compute_invariants(const FactorModule& f);

// Complete polarization of I and J under one shared variable map. Output
// generators are squarefree with total degrees preserved; the pair is a
// valid factor in source_n + e_total variables.
std::pair<FactorModule, PolarizationMap> polarize(const FactorModule& f);

// The sorted distinct positive exponents of x_i across G(I) ∪ G(J).
// `var_index` is 1-based.
std::vector<int> type_with_respect_to(const FactorModule& f, int var_index);

// Compresses exponent levels: in every variable, the occurring positive
// exponents k_1 < … < k_s are relabeled to 1, …, s in all generators of I
// and J; generator sets are re-minimalized afterwards.
FactorModule canonical_form(const FactorModule& f);

// Same relabeling restricted to a chosen set of variables (0-based mask).
FactorModule relabel_exponent_levels(const FactorModule& f,
                                     const std::vector<bool>& vars);

}  // namespace stanley
