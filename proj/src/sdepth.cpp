#include "stanley/sdepth.hpp"

#include <algorithm>
#include <numeric>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

long long bound_volume(const std::vector<int>& g) {
    long long v = 1;
    for (int gi : g) {
        v *= gi + 1;
        if (v > (1LL << 40)) return 1LL << 40;
    }
    return v;
}

int vec_degree(const std::vector<int>& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool vec_leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool deg_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    const int da = vec_degree(a), db = vec_degree(b);
    if (da != db) return da < db;
    return a < b;
}

// Fixed-width bitsets over point indices.
class BitRows {
public:
    BitRows(std::size_t rows, std::size_t bits)
        : words_((bits + 63) / 64), data_(rows * words_, 0) {}

    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
    std::size_t words() const { return words_; }

private:
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

// Relations, rho values and search machinery shared by the decision
// procedure and the exhaustive reference search.
struct PosetIndex {
    const FactorPoset& poset;
    std::size_t size;
    std::size_t words;
    std::vector<int> rho;
    BitRows up;    // up.row(p): points q with p <= q
    BitRows down;  // down.row(p): points q with q <= p

    explicit PosetIndex(const FactorPoset& p)
        : poset(p),
          size(p.points.size()),
          words((size + 63) / 64),
          up(size, size),
          down(size, size) {
        rho.resize(size);
        for (std::size_t i = 0; i < size; ++i) rho[i] = poset.rho(poset.points[i]);

        // Squarefree posets compare as bitmasks; otherwise fall back to the
        // componentwise test. Points are degree-sorted, so only pairs with
        // i before j can relate upward.
        const bool squarefree =
            std::all_of(poset.g.begin(), poset.g.end(), [](int v) { return v <= 1; });
        std::vector<std::uint32_t> masks;
        if (squarefree) {
            masks.resize(size);
            for (std::size_t i = 0; i < size; ++i)
                for (int j = 0; j < poset.n; ++j)
                    if (poset.points[i][j]) masks[i] |= 1u << j;
        }
        for (std::size_t i = 0; i < size; ++i) {
            set_bit(up.row(i), i);
            set_bit(down.row(i), i);
            for (std::size_t j = i + 1; j < size; ++j) {
                const bool le = squarefree ? (masks[i] & ~masks[j]) == 0
                                           : vec_leq(poset.points[i], poset.points[j]);
                if (le) {
                    set_bit(up.row(i), j);
                    set_bit(down.row(j), i);
                }
            }
        }
    }

    static void set_bit(std::uint64_t* row, std::size_t bit) {
        row[bit / 64] |= std::uint64_t(1) << (bit % 64);
    }
    static bool get_bit(const std::uint64_t* row, std::size_t bit) {
        return (row[bit / 64] >> (bit % 64)) & 1u;
    }
};

struct DecisionSearch {
    const PosetIndex& index;
    int k;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    std::vector<std::uint64_t> covered;
    std::vector<std::uint64_t> admissible;  // rho >= k
    std::vector<std::vector<std::uint64_t>> interval_stack;  // per recursion depth
    std::vector<std::pair<int, int>> chosen;  // (bottom, top) point indices

    DecisionSearch(const PosetIndex& idx, int k_, long long budget_)
        : index(idx),
          k(k_),
          budget(budget_),
          covered(idx.words, 0),
          admissible(idx.words, 0),
          interval_stack(idx.size, std::vector<std::uint64_t>(idx.words, 0)) {
        for (std::size_t p = 0; p < index.size; ++p)
            if (index.rho[p] >= k) PosetIndex::set_bit(admissible.data(), p);
    }

    // Every point needs at least one admissible top above it; a point
    // without one can never be covered at this k.
    bool statically_feasible() const {
        for (std::size_t p = 0; p < index.size; ++p) {
            bool any = false;
            const std::uint64_t* u = index.up.row(p);
            for (std::size_t w = 0; w < index.words; ++w)
                if (u[w] & admissible[w]) {
                    any = true;
                    break;
                }
            if (!any) return false;
        }
        return true;
    }

    // Necessary condition on a partial cover: every uncovered point must
    // still see an uncovered admissible top. Quadratic, so big posets only
    // run it periodically.
    bool uncovered_points_reachable(std::size_t from) const {
        for (std::size_t p = from; p < index.size; ++p) {
            if (PosetIndex::get_bit(covered.data(), p)) continue;
            bool any = false;
            const std::uint64_t* u = index.up.row(p);
            for (std::size_t w = 0; w < index.words; ++w)
                if (u[w] & admissible[w] & ~covered[w]) {
                    any = true;
                    break;
                }
            if (!any) return false;
        }
        return true;
    }

    bool solve(std::size_t scan_from, std::size_t depth) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        std::size_t c = scan_from;
        while (c < index.size && PosetIndex::get_bit(covered.data(), c)) ++c;
        if (c == index.size) return true;

        if (index.size <= 256 || (nodes & 63) == 0)
            if (!uncovered_points_reachable(c)) return false;

        std::vector<std::uint64_t>& interval = interval_stack[depth];

        // In a degree-lex linear extension, the interval covering the first
        // uncovered point must start exactly there; branch over its top.
        const std::uint64_t* u = index.up.row(c);
        for (std::size_t w = 0; w < index.words; ++w) {
            std::uint64_t cand = u[w] & admissible[w] & ~covered[w];
            while (cand) {
                const int bit = __builtin_ctzll(cand);
                cand &= cand - 1;
                const std::size_t d = w * 64 + static_cast<std::size_t>(bit);

                const std::uint64_t* dn = index.down.row(d);
                bool clash = false;
                for (std::size_t v = 0; v < index.words; ++v) {
                    interval[v] = u[v] & dn[v];
                    if (interval[v] & covered[v]) clash = true;
                }
                if (clash) continue;

                for (std::size_t v = 0; v < index.words; ++v) covered[v] |= interval[v];
                chosen.emplace_back(static_cast<int>(c), static_cast<int>(d));
                if (solve(c + 1, depth + 1)) return true;
                chosen.pop_back();
                for (std::size_t v = 0; v < index.words; ++v) covered[v] &= ~interval[v];
                if (out_of_budget) return false;
            }
        }
        return false;
    }
};

}  // namespace

int FactorPoset::rho(const std::vector<int>& d) const {
    int count = 0;
    for (int j = 0; j < n; ++j)
        if (d[j] == g[j]) ++count;
    return count;
}

FactorPoset build_poset_with_bound(const FactorModule& f, std::vector<int> g,
                                   const EngineCaps& caps) {
    const std::vector<int> lcm_bound = exponent_bounds(f);
    for (int j = 0; j < f.ambient_n(); ++j)
        if (g[j] < lcm_bound[j])
            throw std::invalid_argument("poset bound below the lcm exponents");
    if (bound_volume(g) > caps.box_volume_max)
        throw ResourceCapError("poset bound volume exceeds cap");

    FactorPoset poset;
    poset.n = f.ambient_n();
    poset.g = std::move(g);

    std::vector<int> a(poset.n, 0);
    while (true) {
        if (in_factor(f, Monomial(a))) poset.points.push_back(a);
        int j = poset.n - 1;
        while (j >= 0 && a[j] == poset.g[j]) a[j--] = 0;
        if (j < 0) break;
        ++a[j];
    }
    std::sort(poset.points.begin(), poset.points.end(), deg_lex_less);
    return poset;
}

FactorPoset build_poset(const FactorModule& f, const EngineCaps& caps) {
    return build_poset_with_bound(f, exponent_bounds(f), caps);
}

DecisionResult sdepth_decision(const FactorPoset& poset, int k, const EngineCaps& caps) {
    if (k < 0 || k > poset.n) throw std::out_of_range("target dimension out of range");
    DecisionResult result;
    if (poset.points.empty()) {
        result.status = DecisionStatus::Found;
        result.partition = IntervalPartition{{}, poset.n};
        return result;
    }

    PosetIndex index(poset);
    DecisionSearch search(index, k, caps.sdepth_node_budget);
    if (!search.statically_feasible()) {
        result.status = DecisionStatus::None;
        return result;
    }
    const bool found = search.solve(0, 0);
    result.nodes = search.nodes;
    if (found) {
        IntervalPartition partition;
        partition.rho_min = poset.n;
        for (const auto& [c, d] : search.chosen) {
            partition.intervals.emplace_back(poset.points[c], poset.points[d]);
            partition.rho_min = std::min(partition.rho_min, index.rho[d]);
        }
        result.status = DecisionStatus::Found;
        result.partition = std::move(partition);
    } else {
        result.status = search.out_of_budget ? DecisionStatus::Unknown
                                             : DecisionStatus::None;
    }
    return result;
}

SdepthResult sdepth_of_poset(const FactorPoset& poset, const EngineCaps& caps) {
    if (poset.points.empty())
        throw std::invalid_argument("the poset of a valid factor is never empty");

    // Each point must sit in an interval topped above it, so the best rho
    // reachable from the worst-placed point bounds the value from above.
    PosetIndex index(poset);
    int upper = poset.n;
    for (std::size_t p = 0; p < index.size; ++p) {
        int best = 0;
        const std::uint64_t* u = index.up.row(p);
        for (std::size_t q = p; q < index.size; ++q)
            if (PosetIndex::get_bit(u, q)) best = std::max(best, index.rho[q]);
        upper = std::min(upper, best);
    }

    SdepthResult out;
    long long total_nodes = 0;
    for (int k = upper; k >= 0; --k) {
        DecisionResult dec = sdepth_decision(poset, k, caps);
        total_nodes += dec.nodes;
        if (dec.status == DecisionStatus::Found) {
            out.value = k;
            out.witness = std::move(*dec.partition);
            out.nodes = total_nodes;
            return out;
        }
        if (dec.status == DecisionStatus::None && k == 0)
            throw std::logic_error("singleton partition unexpectedly rejected");
        if (dec.status == DecisionStatus::Unknown) out.exact = false;
    }

    // Even the k = 0 search ran out of budget. Singletons are always a
    // valid partition, so 0 stands as the certified lower end.
    out.value = 0;
    out.witness.rho_min = poset.n;
    for (const auto& p : poset.points) {
        out.witness.intervals.emplace_back(p, p);
        out.witness.rho_min = std::min(out.witness.rho_min, poset.rho(p));
    }
    out.nodes = total_nodes;
    return out;
}

SdepthResult sdepth(const FactorModule& f, const EngineCaps& caps) {
    return sdepth_of_poset(build_poset(f, caps), caps);
}

int sdepth_bruteforce(const FactorPoset& poset, const EngineCaps& caps) {
    const std::size_t size = poset.points.size();
    if (static_cast<int>(size) > caps.brute_points_max)
        throw ResourceCapError("poset too large for exhaustive partition search");
    if (size == 0) return poset.n;

    PosetIndex index(poset);
    std::vector<std::uint32_t> up(size), down(size);
    for (std::size_t p = 0; p < size; ++p)
        for (std::size_t q = 0; q < size; ++q) {
            if (PosetIndex::get_bit(index.up.row(p), q)) up[p] |= 1u << q;
            if (PosetIndex::get_bit(index.down.row(p), q)) down[p] |= 1u << q;
        }

    const std::uint32_t full = (size == 32) ? 0xffffffffu : ((1u << size) - 1);
    std::vector<int> memo(std::size_t(1) << size, -2);  // -2 unvisited

    // best achievable min-rho over completions of a partial cover
    auto rec = [&](auto&& self, std::uint32_t mask) -> int {
        if (mask == full) return poset.n + 1;  // no constraint yet
        int& slot = memo[mask];
        if (slot != -2) return slot;
        int c = __builtin_ctz(~mask);
        int best = -1;  // -1: no completion
        std::uint32_t cand = up[c] & ~mask;
        while (cand) {
            const int d = __builtin_ctz(cand);
            cand &= cand - 1;
            const std::uint32_t interval = up[c] & down[d];
            if (interval & mask) continue;
            const int rest = self(self, mask | interval);
            if (rest < 0) continue;
            best = std::max(best, std::min(index.rho[d], rest));
        }
        slot = best;
        return best;
    };

    const int value = rec(rec, 0);
    if (value < 0) throw std::logic_error("singleton partition unexpectedly rejected");
    return std::min(value, poset.n);
}

PartitionCheck validate_partition(const FactorPoset& poset,
                                  const IntervalPartition& partition) {
    auto fail = [](std::string what) {
        return PartitionCheck{false, std::move(what)};
    };
    auto point_pos = [&](const std::vector<int>& a) -> int {
        const auto it =
            std::lower_bound(poset.points.begin(), poset.points.end(), a, deg_lex_less);
        if (it == poset.points.end() || *it != a) return -1;
        return static_cast<int>(it - poset.points.begin());
    };

    std::vector<char> seen(poset.points.size(), 0);
    int rho_min = poset.n;
    for (const auto& [c, d] : partition.intervals) {
        if (point_pos(c) < 0) return fail("interval bottom is not a poset point");
        if (point_pos(d) < 0) return fail("interval top is not a poset point");
        if (!vec_leq(c, d)) return fail("interval bottom does not divide its top");
        rho_min = std::min(rho_min, poset.rho(d));
        for (std::size_t p = 0; p < poset.points.size(); ++p)
            if (vec_leq(c, poset.points[p]) && vec_leq(poset.points[p], d)) {
                if (seen[p]) return fail("intervals overlap at " + to_text(Monomial(poset.points[p])));
                seen[p] = 1;
            }
    }
    for (std::size_t p = 0; p < poset.points.size(); ++p)
        if (!seen[p])
            return fail("point " + to_text(Monomial(poset.points[p])) + " is uncovered");
    if (!partition.intervals.empty() && rho_min != partition.rho_min)
        return fail("recorded rho_min does not match the intervals");
    return {};
}

}  // namespace stanley
