#pragma once

#include "stanley/betti.hpp"

namespace stanley {

// Second, independent route to the Betti table: resolve J and I by their
// Taylor complexes, lift the inclusion J ⊆ I to a comparison map between
// them, and take the mapping cone, which resolves I/J. Tensoring the cone
// with the residue field and computing homology multidegree by multidegree
// gives the same table betti_table() produces.
//
// Requires |G(I)| + |G(J)| within caps.taylor_gens_max.
BettiTable taylor_oracle(const FactorModule& f, const FieldSpec& field,
                         const EngineCaps& caps = {});

// Symbolic d∘d = 0 check for the cone differential, with full monomial
// coefficients. Exercised by the test suite; any sign or lifting mistake in
// the comparison map shows up here.
bool verify_cone_differential(const FactorModule& f, const EngineCaps& caps = {});

}  // namespace stanley
