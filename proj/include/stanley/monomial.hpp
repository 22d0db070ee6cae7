#pragma once

#include <string>
#include <vector>

#include "stanley/errors.hpp"

namespace stanley {

// A monomial x^a in a fixed number of variables, stored as its exponent
// vector. The zero vector is the unit monomial 1.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int var_count() const { return static_cast<int>(exps.size()); }
    int degree() const;
    bool is_unit() const;
    bool is_squarefree() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical generator order: total degree first, then lexicographic on the
// exponent vector.
bool degree_lex_less(const Monomial& a, const Monomial& b);

bool divides(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial product(const Monomial& u, const Monomial& v);

// A monomial ideal, held by its minimal generating set in canonical order.
// No generator divides another. The empty set is the zero ideal; the sole
// unit generator is the whole ring.
struct MonomialIdeal {
    int ambient_n = 0;
    std::vector<Monomial> gens;

    bool is_zero() const { return gens.empty(); }
    bool is_squarefree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

// Keeps only the divisibility-minimal elements and sorts them canonically.
// The result generates the same ideal as the input set.
MonomialIdeal minimalize(std::vector<Monomial> ms, int n);

// Membership test: u lies in I iff some generator divides u.
bool contains(const MonomialIdeal& ideal, const Monomial& u);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// The factor module I/J for monomial ideals J strictly inside I. J may be
// the zero ideal.
struct FactorModule {
    MonomialIdeal ideal_I;
    MonomialIdeal ideal_J;

    int ambient_n() const { return ideal_I.ambient_n; }
    bool is_squarefree() const {
        return ideal_I.is_squarefree() && ideal_J.is_squarefree();
    }

    friend bool operator==(const FactorModule&, const FactorModule&) = default;
};

// Validates J ⊆ I and J ≠ I; throws FactorError otherwise.
FactorModule make_factor(MonomialIdeal ideal_I, MonomialIdeal ideal_J);

// Componentwise largest exponent over all generators of I and J. This is
// the exponent vector of lcm(G(I) ∪ G(J)) and bounds every multidegree the
// engines need to look at.
std::vector<int> exponent_bounds(const FactorModule& f);

// True iff x^a lies in I but not in J.
bool in_factor(const FactorModule& f, const Monomial& u);

std::string to_text(const Monomial& u);
std::string to_text(const MonomialIdeal& ideal);
std::string to_text(const FactorModule& f);

}  // namespace stanley
