#include "stanley/transforms.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace stanley {

namespace {

int fresh_variable_count(const std::vector<int>& e_per_var) {
    int total = 0;
    for (int e : e_per_var)
        if (e > 0) total += e - 1;
    return total;
}

// All monomials of total degree `target` with exps[i] <= cap[i].
void enumerate_bounded(const std::vector<int>& cap, int target, std::size_t i,
                       std::vector<int>& cur, std::vector<Monomial>& out) {
    if (i + 1 == cap.size()) {
        if (target <= cap[i]) {
            cur[i] = target;
            out.emplace_back(cur);
            cur[i] = 0;
        }
        return;
    }
    const int hi = std::min(cap[i], target);
    for (int v = 0; v <= hi; ++v) {
        cur[i] = v;
        enumerate_bounded(cap, target - v, i + 1, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

Monomial PolarizationMap::polarize_monomial(const Monomial& u) const {
    std::vector<int> e(target_n, 0);
    for (int i = 0; i < source_n; ++i) {
        const int a = u.exps[i];
        for (int k = 0; k < a; ++k) e[slots[i][k] - 1] = 1;
    }
    return Monomial(std::move(e));
}

Monomial PolarizationMap::depolarize_monomial(const Monomial& u) const {
    std::vector<int> e(source_n, 0);
    for (int i = 0; i < source_n; ++i)
        for (int target : slots[i]) e[i] += u.exps[target - 1];
    return Monomial(std::move(e));
}

std::vector<int> type_with_respect_to(const FactorModule& f, int var_index) {
    if (var_index < 1 || var_index > f.ambient_n())
        throw std::out_of_range("variable index out of range");
    std::set<int> levels;
    auto absorb = [&](const MonomialIdeal& ideal) {
        for (const Monomial& g : ideal.gens)
            if (g.exps[var_index - 1] > 0) levels.insert(g.exps[var_index - 1]);
    };
    absorb(f.ideal_I);
    absorb(f.ideal_J);
    return {levels.begin(), levels.end()};
}

FactorModule relabel_exponent_levels(const FactorModule& f,
                                     const std::vector<bool>& vars) {
    const int n = f.ambient_n();

    // The per-variable relabelings touch disjoint coordinates, so they can
    // all be applied in one pass.
    std::vector<std::vector<std::pair<int, int>>> maps(n);
    for (int i = 0; i < n; ++i) {
        if (!vars[i]) continue;
        auto levels = type_with_respect_to(f, i + 1);
        for (std::size_t j = 0; j < levels.size(); ++j)
            maps[i].emplace_back(levels[j], static_cast<int>(j) + 1);
    }

    auto relabel = [&](const MonomialIdeal& ideal) {
        std::vector<Monomial> gens;
        gens.reserve(ideal.gens.size());
        for (const Monomial& g : ideal.gens) {
            Monomial out = g;
            for (int i = 0; i < n; ++i)
                for (const auto& [from, to] : maps[i])
                    if (out.exps[i] == from) {
                        out.exps[i] = to;
                        break;
                    }
            gens.push_back(std::move(out));
        }
        return minimalize(std::move(gens), n);
    };

    return make_factor(relabel(f.ideal_I), relabel(f.ideal_J));
}

FactorModule canonical_form(const FactorModule& f) {
    return relabel_exponent_levels(f, std::vector<bool>(f.ambient_n(), true));
}

InvariantReport compute_invariants(const FactorModule& f) {
    InvariantReport rep;
    rep.e_per_var = exponent_bounds(f);
    rep.e_total = fresh_variable_count(rep.e_per_var);

    rep.d_min = std::numeric_limits<int>::max();
    for (const Monomial& g : f.ideal_I.gens)
        rep.d_min = std::min(rep.d_min, g.degree());
    rep.r_count = 0;
    for (const Monomial& g : f.ideal_I.gens)
        if (g.degree() == rep.d_min) ++rep.r_count;

    // The index compresses exponent levels before taking the degree gap,
    // but only in variables that actually occur in G(I): compressing a
    // variable seen only in J changes J alone and would overstate the gap.
    std::vector<bool> in_I_support(f.ambient_n(), false);
    for (const Monomial& g : f.ideal_I.gens)
        for (int i = 0; i < f.ambient_n(); ++i)
            if (g.exps[i] > 0) in_I_support[i] = true;
    const FactorModule compressed = relabel_exponent_levels(f, in_I_support);

    int d_prime = std::numeric_limits<int>::max();
    for (const Monomial& g : compressed.ideal_I.gens)
        d_prime = std::min(d_prime, g.degree());
    const int e_prime = fresh_variable_count(exponent_bounds(compressed));
    rep.index_t = std::max(d_prime - e_prime, 0);

    // Degree-(d+1) slice of I \ J inside the box enlarged by one.
    std::vector<int> cap = rep.e_per_var;
    for (int& c : cap) ++c;
    std::vector<Monomial> candidates;
    std::vector<int> cur(f.ambient_n(), 0);
    enumerate_bounded(cap, rep.d_min + 1, 0, cur, candidates);
    for (const Monomial& m : candidates)
        if (in_factor(f, m)) rep.b_set.push_back(m);
    std::sort(rep.b_set.begin(), rep.b_set.end(), degree_lex_less);

    return rep;
}

std::pair<FactorModule, PolarizationMap> polarize(const FactorModule& f) {
    const int n = f.ambient_n();
    const std::vector<int> bounds = exponent_bounds(f);

    PolarizationMap map;
    map.source_n = n;
    map.target_n = n + fresh_variable_count(bounds);
    map.slots.resize(n);
    int next_fresh = n + 1;
    for (int i = 0; i < n; ++i) {
        map.slots[i].push_back(i + 1);
        for (int k = 1; k < bounds[i]; ++k) map.slots[i].push_back(next_fresh++);
    }

    auto polarize_ideal = [&](const MonomialIdeal& ideal) {
        std::vector<Monomial> gens;
        gens.reserve(ideal.gens.size());
        for (const Monomial& g : ideal.gens)
            gens.push_back(map.polarize_monomial(g));
        return minimalize(std::move(gens), map.target_n);
    };

    FactorModule out = make_factor(polarize_ideal(f.ideal_I), polarize_ideal(f.ideal_J));
    return {std::move(out), std::move(map)};
}

}  // namespace stanley
