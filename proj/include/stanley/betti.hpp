#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stanley/caps.hpp"
#include "stanley/field.hpp"
#include "stanley/monomial.hpp"

namespace stanley {

// Multigraded Betti numbers of a factor I/J over the chosen field, with the
// projective dimension and depth they determine. Only nonzero ranks are
// stored; every multidegree lies inside the lcm box of G(I) ∪ G(J).
struct BettiTable {
    FieldSpec field;
    std::map<std::pair<int, std::vector<int>>, int> entries;
    int pd = 0;
    int depth = 0;

    bool same_entries(const BettiTable& other) const {
        return entries == other.entries;
    }
};

// Rank of the i-th homology of the Koszul complex on all variables,
// restricted to multidegree a. Throws BoxExceededError outside the lcm box
// and ResourceCapError above the configured limits.
int tor_rank(const FactorModule& f, const FieldSpec& field, int i,
             const std::vector<int>& a, const EngineCaps& caps = {});

// Same computation without the box precondition; lets tests confirm that
// multidegrees outside the box contribute nothing.
int koszul_homology_rank(const FactorModule& f, const FieldSpec& field, int i,
                         const std::vector<int>& a);

BettiTable betti_table(const FactorModule& f, const FieldSpec& field,
                       const EngineCaps& caps = {});

int depth(const FactorModule& f, const FieldSpec& field = {},
          const EngineCaps& caps = {});

// Deterministic text rendering, rows sorted by (homological index,
// multidegree lex).
std::string to_report(const BettiTable& table);

}  // namespace stanley
