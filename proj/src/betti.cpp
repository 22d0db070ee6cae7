#include "stanley/betti.hpp"

#include <algorithm>
#include <sstream>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

long long box_volume(const std::vector<int>& g) {
    long long v = 1;
    for (int gi : g) {
        v *= gi + 1;
        if (v > (1LL << 40)) return 1LL << 40;  // saturate, caps will reject
    }
    return v;
}

void check_caps(const FactorModule& f, const std::vector<int>& g,
                const EngineCaps& caps) {
    if (f.ambient_n() > caps.koszul_n_max)
        throw ResourceCapError("ambient variable count exceeds Koszul cap");
    if (box_volume(g) > caps.box_volume_max)
        throw ResourceCapError("multidegree box volume exceeds cap");
}

// Koszul homology of I/J at one multidegree. The coefficient space in
// homological position i is spanned by the variable subsets F of size i
// with x^(a - e_F) inside I \ J; boundaries drop one variable at a time
// with alternating signs.
struct KoszulSlice {
    int n;
    std::vector<char> alive;              // indexed by subset mask
    std::vector<std::vector<int>> basis;  // basis[i] = alive masks of size i

    KoszulSlice(const FactorModule& f, const std::vector<int>& a) : n(f.ambient_n()) {
        const std::size_t size = std::size_t(1) << n;
        alive.assign(size, 0);
        basis.assign(n + 1, {});

        // Only subsets of supp(a) can give nonnegative multidegrees.
        std::uint32_t supp = 0;
        for (int j = 0; j < n; ++j)
            if (a[j] >= 1) supp |= 1u << j;

        std::vector<int> shifted(n);
        for (std::uint32_t mask = supp;; mask = (mask - 1) & supp) {
            for (int j = 0; j < n; ++j)
                shifted[j] = a[j] - ((mask >> j) & 1u);
            if (in_factor(f, Monomial(shifted))) {
                alive[mask] = 1;
                basis[__builtin_popcount(mask)].push_back(static_cast<int>(mask));
            }
            if (mask == 0) break;
        }
        for (auto& b : basis) std::sort(b.begin(), b.end());
    }

    IntMatrix boundary(int i) const {
        if (i < 1 || i > n) return {};
        const auto& src = basis[i];
        const auto& dst = basis[i - 1];
        IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        if (src.empty() || dst.empty()) return m;

        std::vector<int> dst_pos(std::size_t(1) << n, -1);
        for (std::size_t k = 0; k < dst.size(); ++k)
            dst_pos[dst[k]] = static_cast<int>(k);

        for (std::size_t c = 0; c < src.size(); ++c) {
            const std::uint32_t mask = static_cast<std::uint32_t>(src[c]);
            int position = 0;
            for (int j = 0; j < n; ++j) {
                if (!((mask >> j) & 1u)) continue;
                const std::uint32_t sub = mask & ~(1u << j);
                const int r = dst_pos[sub];
                if (r >= 0) m.at(r, static_cast<int>(c)) = (position % 2 == 0) ? 1 : -1;
                ++position;
            }
        }
        return m;
    }

    int homology_rank(int i, const FieldSpec& field) const {
        if (i < 0 || i > n) return 0;
        const int dim = static_cast<int>(basis[i].size());
        if (dim == 0) return 0;
        const int rank_out = (i >= 1) ? rank(boundary(i), field) : 0;
        const int rank_in = (i + 1 <= n) ? rank(boundary(i + 1), field) : 0;
        return dim - rank_out - rank_in;
    }
};

}  // namespace

int tor_rank(const FactorModule& f, const FieldSpec& field, int i,
             const std::vector<int>& a, const EngineCaps& caps) {
    const int n = f.ambient_n();
    if (i < 0 || i > n) throw std::out_of_range("homological index out of range");
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("multidegree length does not match ambient");
    const std::vector<int> g = exponent_bounds(f);
    for (int j = 0; j < n; ++j)
        if (a[j] < 0 || a[j] > g[j])
            throw BoxExceededError("multidegree lies outside the lcm box");
    check_caps(f, g, caps);
    return KoszulSlice(f, a).homology_rank(i, field);
}

int koszul_homology_rank(const FactorModule& f, const FieldSpec& field, int i,
                         const std::vector<int>& a) {
    if (i < 0 || i > f.ambient_n()) return 0;
    return KoszulSlice(f, a).homology_rank(i, field);
}

BettiTable betti_table(const FactorModule& f, const FieldSpec& field,
                       const EngineCaps& caps) {
    const int n = f.ambient_n();
    const std::vector<int> g = exponent_bounds(f);
    check_caps(f, g, caps);

    BettiTable table;
    table.field = field;

    std::vector<int> a(n, 0);
    while (true) {
        KoszulSlice slice(f, a);
        for (int i = 0; i <= n; ++i) {
            if (slice.basis[i].empty()) continue;
            const int h = slice.homology_rank(i, field);
            if (h > 0) table.entries[{i, a}] = h;
        }
        int j = n - 1;
        while (j >= 0 && a[j] == g[j]) a[j--] = 0;
        if (j < 0) break;
        ++a[j];
    }

    table.pd = 0;
    for (const auto& [key, rank] : table.entries)
        table.pd = std::max(table.pd, key.first);
    table.depth = n - table.pd;
    return table;
}

int depth(const FactorModule& f, const FieldSpec& field, const EngineCaps& caps) {
    return betti_table(f, field, caps).depth;
}

std::string to_report(const BettiTable& table) {
    std::ostringstream out;
    out << "field " << table.field.characteristic << "\n";
    for (const auto& [key, rank] : table.entries) {
        out << key.first << " (";
        for (std::size_t j = 0; j < key.second.size(); ++j) {
            if (j) out << ",";
            out << key.second[j];
        }
        out << ") " << rank << "\n";
    }
    out << "pd " << table.pd << "\n";
    out << "depth " << table.depth << "\n";
    return out.str();
}

}  // namespace stanley
