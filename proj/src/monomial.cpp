#include "stanley/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stanley {

int Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

bool Monomial::is_unit() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e <= 1; });
}

bool degree_lex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

static void require_same_length(const Monomial& u, const Monomial& v) {
    if (u.var_count() != v.var_count())
        throw std::invalid_argument("monomials live in different ambient rings");
}

bool divides(const Monomial& u, const Monomial& v) {
    require_same_length(u, v);
    for (int i = 0; i < u.var_count(); ++i)
        if (u.exps[i] > v.exps[i]) return false;
    return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    require_same_length(u, v);
    std::vector<int> e(u.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(u.exps[i], v.exps[i]);
    return Monomial(std::move(e));
}

Monomial product(const Monomial& u, const Monomial& v) {
    require_same_length(u, v);
    std::vector<int> e(u.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = u.exps[i] + v.exps[i];
    return Monomial(std::move(e));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens.begin(), gens.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal minimalize(std::vector<Monomial> ms, int n) {
    for (const Monomial& m : ms)
        if (m.var_count() != n)
            throw std::invalid_argument("generator length does not match ambient");

    std::sort(ms.begin(), ms.end(), degree_lex_less);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

    // Scanning in degree order, a generator can only be divided by one that
    // came earlier.
    std::vector<Monomial> kept;
    for (const Monomial& m : ms) {
        bool redundant = false;
        for (const Monomial& k : kept)
            if (divides(k, m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(m);
    }
    return MonomialIdeal{n, std::move(kept)};
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
    if (u.var_count() != ideal.ambient_n)
        throw std::invalid_argument("monomial length does not match ambient");
    for (const Monomial& g : ideal.gens)
        if (divides(g, u)) return true;
    return false;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient_n != b.ambient_n)
        throw std::invalid_argument("ideals live in different ambient rings");
    std::vector<Monomial> joins;
    joins.reserve(a.gens.size() * b.gens.size());
    for (const Monomial& u : a.gens)
        for (const Monomial& v : b.gens) joins.push_back(lcm(u, v));
    return minimalize(std::move(joins), a.ambient_n);
}

FactorModule make_factor(MonomialIdeal ideal_I, MonomialIdeal ideal_J) {
    if (ideal_I.ambient_n != ideal_J.ambient_n)
        throw std::invalid_argument("ideals live in different ambient rings");

    for (const Monomial& v : ideal_J.gens)
        if (!contains(ideal_I, v))
            throw FactorError(FactorErrorKind::NotContained,
                              "generator " + to_text(v) + " of J is not in I");

    // Given J ⊆ I, the ideals are equal exactly when every generator of I
    // already lies in J.
    bool proper = false;
    for (const Monomial& u : ideal_I.gens)
        if (!contains(ideal_J, u)) {
            proper = true;
            break;
        }
    if (!proper)
        throw FactorError(FactorErrorKind::Equal, "I and J are the same ideal");

    return FactorModule{std::move(ideal_I), std::move(ideal_J)};
}

std::vector<int> exponent_bounds(const FactorModule& f) {
    std::vector<int> e(f.ambient_n(), 0);
    auto absorb = [&e](const MonomialIdeal& ideal) {
        for (const Monomial& g : ideal.gens)
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = std::max(e[i], g.exps[i]);
    };
    absorb(f.ideal_I);
    absorb(f.ideal_J);
    return e;
}

bool in_factor(const FactorModule& f, const Monomial& u) {
    return contains(f.ideal_I, u) && !contains(f.ideal_J, u);
}

std::string to_text(const Monomial& u) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < u.var_count(); ++i) {
        if (u.exps[i] == 0) continue;
        if (!first) out << '*';
        out << 'x' << (i + 1);
        if (u.exps[i] > 1) out << '^' << u.exps[i];
        first = false;
    }
    if (first) out << '1';
    return out.str();
}

std::string to_text(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
        if (i) out << ", ";
        out << to_text(ideal.gens[i]);
    }
    return out.str();
}

std::string to_text(const FactorModule& f) {
    return "(" + to_text(f.ideal_I) + ") / (" + to_text(f.ideal_J) + ")";
}

}  // namespace stanley
