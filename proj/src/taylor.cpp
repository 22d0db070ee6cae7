#include "stanley/taylor.hpp"

#include <algorithm>
#include <map>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

// Basis element of the cone: a nonempty subset of G(I) (homological degree
// |A| - 1) or a nonempty subset of G(J) (shifted up by one).
struct ConeElement {
    bool from_J;
    std::uint32_t mask;
    int hom_degree;
    std::vector<int> shift;  // multidegree of the free summand (subset lcm)
};

struct ConeTerm {
    int target;   // index into elements
    int coeff;    // +1 or -1
    std::vector<int> multiplier;  // monomial the differential multiplies by
};

struct Cone {
    int n = 0;
    std::vector<ConeElement> elements;
    std::vector<std::vector<ConeTerm>> diff;  // per element

    int max_degree() const {
        int d = 0;
        for (const auto& e : elements) d = std::max(d, e.hom_degree);
        return d;
    }
};

std::vector<int> subtract(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

std::vector<std::vector<int>> subset_lcms(const std::vector<Monomial>& gens, int n) {
    const std::size_t size = std::size_t(1) << gens.size();
    std::vector<std::vector<int>> lcms(size, std::vector<int>(n, 0));
    for (std::uint32_t mask = 1; mask < size; ++mask) {
        const int low = __builtin_ctz(mask);
        const std::uint32_t rest = mask & (mask - 1);
        for (int j = 0; j < n; ++j)
            lcms[mask][j] = std::max(lcms[rest][j], gens[low].exps[j]);
    }
    return lcms;
}

Cone build_cone(const FactorModule& f, const EngineCaps& caps) {
    const int r = static_cast<int>(f.ideal_I.gens.size());
    const int s = static_cast<int>(f.ideal_J.gens.size());
    if (r + s > caps.taylor_gens_max)
        throw ResourceCapError("generator count exceeds resolution cap");

    Cone cone;
    cone.n = f.ambient_n();
    const auto lcm_I = subset_lcms(f.ideal_I.gens, cone.n);
    const auto lcm_J = subset_lcms(f.ideal_J.gens, cone.n);

    // Cover map: each generator of J is a multiple of some generator of I;
    // pick the first. The comparison map sends a subset of G(J) to the
    // image subset of G(I), vanishing when the cover collides.
    std::vector<int> cover(s);
    for (int j = 0; j < s; ++j) {
        cover[j] = -1;
        for (int i = 0; i < r; ++i)
            if (divides(f.ideal_I.gens[i], f.ideal_J.gens[j])) {
                cover[j] = i;
                break;
            }
        if (cover[j] < 0)
            throw std::logic_error("generator of J has no divisor in G(I)");
    }

    std::map<std::pair<bool, std::uint32_t>, int> index_of;
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        index_of[{false, mask}] = static_cast<int>(cone.elements.size());
        cone.elements.push_back(
            {false, mask, __builtin_popcount(mask) - 1, lcm_I[mask]});
    }
    for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
        index_of[{true, mask}] = static_cast<int>(cone.elements.size());
        cone.elements.push_back(
            {true, mask, __builtin_popcount(mask), lcm_J[mask]});
    }

    // Taylor differential on a sorted index set: dropping the element in
    // position p carries sign (-1)^p.
    auto taylor_terms = [&](bool from_J, std::uint32_t mask,
                            const std::vector<std::vector<int>>& lcms, int sign_flip) {
        std::vector<ConeTerm> terms;
        int position = 0;
        for (int t = 0; t < 32; ++t) {
            if (!((mask >> t) & 1u)) continue;
            const std::uint32_t sub = mask & ~(1u << t);
            if (sub != 0) {
                const int coeff = ((position % 2 == 0) ? 1 : -1) * sign_flip;
                terms.push_back({index_of.at({from_J, sub}), coeff,
                                 subtract(lcms[mask], lcms[sub])});
            }
            ++position;
        }
        return terms;
    };

    cone.diff.resize(cone.elements.size());
    for (std::size_t id = 0; id < cone.elements.size(); ++id) {
        const ConeElement& e = cone.elements[id];
        if (!e.from_J) {
            cone.diff[id] = taylor_terms(false, e.mask, lcm_I, +1);
            continue;
        }
        // Cone rule d(0, x) = (phi(x), -d(x)).
        std::vector<ConeTerm> terms = taylor_terms(true, e.mask, lcm_J, -1);

        std::uint32_t image = 0;
        bool collision = false;
        int inversions = 0;
        std::vector<int> images;
        for (int t = 0; t < 32 && !collision; ++t) {
            if (!((e.mask >> t) & 1u)) continue;
            const int c = cover[t];
            if (image & (1u << c)) {
                collision = true;
                break;
            }
            image |= 1u << c;
            for (int prev : images)
                if (prev > c) ++inversions;
            images.push_back(c);
        }
        if (!collision) {
            const int sign = (inversions % 2 == 0) ? 1 : -1;
            terms.push_back({index_of.at({false, image}), sign,
                             subtract(lcm_J[e.mask], lcm_I[image])});
        }
        cone.diff[id] = std::move(terms);
    }
    return cone;
}

}  // namespace

BettiTable taylor_oracle(const FactorModule& f, const FieldSpec& field,
                         const EngineCaps& caps) {
    const Cone cone = build_cone(f, caps);
    const int n = cone.n;

    // The cone tensored with the residue field splits by multidegree: only
    // summands whose shift equals the multidegree survive, and only scalar
    // entries of the differential (equal lcms) stay nonzero.
    std::map<std::vector<int>, std::map<int, std::vector<int>>> by_shift;
    for (std::size_t id = 0; id < cone.elements.size(); ++id)
        by_shift[cone.elements[id].shift][cone.elements[id].hom_degree].push_back(
            static_cast<int>(id));

    const int max_deg = cone.max_degree();
    BettiTable table;
    table.field = field;

    for (const auto& [shift, layers] : by_shift) {
        auto layer_of = [&](int i) -> const std::vector<int>* {
            auto it = layers.find(i);
            return it == layers.end() ? nullptr : &it->second;
        };
        auto boundary_rank = [&](int i) -> int {
            const std::vector<int>* src = layer_of(i);
            const std::vector<int>* dst = layer_of(i - 1);
            if (!src || !dst) return 0;
            std::map<int, int> dst_pos;
            for (std::size_t k = 0; k < dst->size(); ++k) dst_pos[(*dst)[k]] = static_cast<int>(k);
            IntMatrix m(static_cast<int>(dst->size()), static_cast<int>(src->size()));
            bool any = false;
            for (std::size_t c = 0; c < src->size(); ++c)
                for (const ConeTerm& term : cone.diff[(*src)[c]]) {
                    if (cone.elements[term.target].shift != shift) continue;
                    m.at(dst_pos.at(term.target), static_cast<int>(c)) = term.coeff;
                    any = true;
                }
            return any ? rank(m, field) : 0;
        };

        for (int i = 0; i <= max_deg; ++i) {
            const std::vector<int>* layer = layer_of(i);
            if (!layer) continue;
            const int h = static_cast<int>(layer->size()) - boundary_rank(i) -
                          boundary_rank(i + 1);
            if (h > 0) table.entries[{i, shift}] = h;
        }
    }

    table.pd = 0;
    for (const auto& [key, rank] : table.entries)
        table.pd = std::max(table.pd, key.first);
    table.depth = n - table.pd;
    return table;
}

bool verify_cone_differential(const FactorModule& f, const EngineCaps& caps) {
    const Cone cone = build_cone(f, caps);
    for (std::size_t id = 0; id < cone.elements.size(); ++id) {
        // Accumulate d(d(e)) as exact (target, monomial) -> coefficient sums.
        std::map<std::pair<int, std::vector<int>>, long long> acc;
        for (const ConeTerm& first : cone.diff[id])
            for (const ConeTerm& second : cone.diff[first.target]) {
                std::vector<int> mult(cone.n);
                for (int j = 0; j < cone.n; ++j)
                    mult[j] = first.multiplier[j] + second.multiplier[j];
                acc[{second.target, std::move(mult)}] +=
                    static_cast<long long>(first.coeff) * second.coeff;
            }
        for (const auto& [key, coeff] : acc)
            if (coeff != 0) return false;
    }
    return true;
}

}  // namespace stanley
