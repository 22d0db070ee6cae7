// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "stanley/fuzz.hpp"
#include "stanley/parse.hpp"
#include "stanley/serialize.hpp"
#include "stanley/taylor.hpp"

using namespace stanley;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    bool pass = true;
    std::ostringstream detail;
    double ms = 0.0;
};

std::vector<Criterion> g_criteria;

Criterion& criterion(int id) {
    g_criteria.push_back(Criterion{id});
    return g_criteria.back();
}

void require(Criterion& c, bool ok, const std::string& what) {
    if (ok) return;
    c.pass = false;
    if (c.detail.tellp() > 0) c.detail << "; ";
    c.detail << what;
}

// Runs the body, accumulates wall time, then enforces the budget (0: none).
template <typename F>
void timed(Criterion& c, double limit_ms, F&& body) {
    const auto start = Clock::now();
    body(c);
    c.ms += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (limit_ms > 0 && c.ms > limit_ms) {
        c.pass = false;
        if (c.detail.tellp() > 0) c.detail << "; ";
        c.detail << "took " << c.ms << " ms, limit " << limit_ms;
    }
}

struct CorpusEntry {
    FactorModule factor;
    InstanceAnalysis analysis;
};

}  // namespace

int main() {
    const FieldSpec field{};
    const EngineCaps caps{};

    timed(criterion(1), 1000.0, [&](Criterion& c) {
        const FactorModule f = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2", "0", 3);
        const InvariantReport inv = compute_invariants(f);
        require(c, inv.e_per_var == std::vector<int>{10, 4, 5}, "e_per_var");
        require(c, inv.e_total == 16, "e_total");
    });

    timed(criterion(2), 1000.0, [&](Criterion& c) {
        const FactorModule f = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2", "0", 3);
        const FactorModule canonical = canonical_form(f);
        require(c, canonical == parse_factor("x1*x2^2*x3, x1^2*x2", "0", 3),
                "canonical generators");
        const InvariantReport inv = compute_invariants(canonical);
        require(c, inv.d_min == 3, "d_prime");
        require(c, inv.e_total == 2, "e_prime");
        require(c, inv.index_t == 1, "t of canonical");
        require(c, compute_invariants(f).index_t == 1, "t of original");
    });

    timed(criterion(3), 1000.0, [&](Criterion& c) {
        const FactorModule f = parse_factor("x1", "x1*x2^2", 2);
        const InstanceAnalysis a = analyze_instance(f, field, caps);
        require(c, a.invariants.e_total == 1, "e_total");
        require(c, a.invariants.index_t == 0, "t");
        require(c, a.polarized == parse_factor("x1", "x1*x2*x3", 3), "polarization");
        require(c, a.sdepth_factor.known() && *a.sdepth_factor.value == 1, "sdepth");
        require(c, a.depth_factor.known() && *a.depth_factor.value == 1, "depth");
    });

    timed(criterion(4), 1000.0, [&](Criterion& c) {
        const FactorModule f = parse_factor("x2", "x1^2*x2, x1*x2^2", 2);
        const InstanceAnalysis a = analyze_instance(f, field, caps);
        require(c, a.invariants.e_total == 2, "e_total");
        require(c, a.invariants.index_t == 0, "t");
        require(c, a.sdepth_factor.known() && *a.sdepth_factor.value == 0, "sdepth");
        require(c, a.depth_factor.known() && *a.depth_factor.value == 0, "depth");
    });

    timed(criterion(5), 0.0, [&](Criterion& c) {
        const FactorModule canonical =
            canonical_form(parse_factor("x1^3*x2^4, x1^11*x2", "0", 2));
        require(c, canonical.ideal_I.gens.size() == 2, "generator count");
        require(c, canonical == parse_factor("x1*x2^2, x1^2*x2", "0", 2), "generators");
    });

    timed(criterion(6), 30000.0, [&](Criterion& c) {
        const FactorModule f = parse_factor(
            "x1, x2, x3, x4, x5, x6", "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x7", 7);
        const InstanceAnalysis a = analyze_instance(f, field, caps);
        require(c, a.invariants.index_t == 0, "t");
        require(c, a.sdepth_factor.known(), "sdepth decided");
        if (a.sdepth_factor.known())
            require(c, *a.sdepth_factor.value <= 1, "sdepth bound");
        require(c, a.depth_factor.known(), "depth decided");
        if (a.depth_factor.known())
            require(c, *a.depth_factor.value <= 1, "depth bound");
        const CheckOutcome six = check_six_variable_canonical(a);
        require(c, six.hypothesis_held, "hypothesis");
        require(c, six.conclusion_held.value_or(false), "conclusion");
    });

    // Criteria 7-12 share one seeded corpus.
    FuzzConfig config;
    config.seed = 20240901;
    config.instance_count = 200;
    config.n_max = 4;
    config.exponent_max = 3;
    config.gen_count_max = 4;
    config.field = field;
    config.caps = caps;

    std::vector<CorpusEntry> corpus;
    double corpus_ms = 0.0;
    {
        const auto start = Clock::now();
        SplitMix64 rng(config.seed);
        for (int i = 0; i < config.instance_count; ++i) {
            CorpusEntry entry;
            entry.factor = random_factor(rng, config);
            entry.analysis = analyze_instance(entry.factor, field, caps);
            corpus.push_back(std::move(entry));
        }
        corpus_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    timed(criterion(7), 600000.0, [&](Criterion& c) {
        int failures = 0, skipped = 0;
        for (const CorpusEntry& e : corpus) {
            const CheckOutcome out = check_polarization_gap(e.analysis);
            if (out.unknown) {
                ++skipped;
                continue;
            }
            if (out.failed()) {
                ++failures;
                std::cout << "witness: " << json_of(out).dump() << "\n";
            }
        }
        c.detail << "decided " << (corpus.size() - skipped) << "/" << corpus.size();
        require(c, failures == 0, "gap changed under polarization");
        require(c, skipped <= static_cast<int>(corpus.size()) / 10,
                "too many skipped instances");
        c.ms += corpus_ms;  // corpus preparation belongs to this budget
    });

    timed(criterion(8), 0.0, [&](Criterion& c) {
        int failures = 0, skipped = 0;
        for (const CorpusEntry& e : corpus) {
            const CheckOutcome out = check_canonical_invariance(e.analysis);
            if (out.unknown) {
                ++skipped;
                continue;
            }
            if (out.failed()) {
                ++failures;
                std::cout << "witness: " << json_of(out).dump() << "\n";
            }
        }
        c.detail << "decided " << (corpus.size() - skipped) << "/" << corpus.size();
        require(c, failures == 0, "depth or sdepth moved under compression");
        require(c, skipped <= static_cast<int>(corpus.size()) / 10,
                "too many skipped instances");
    });

    timed(criterion(9), 0.0, [&](Criterion& c) {
        int failures = 0, skipped = 0;
        for (const CorpusEntry& e : corpus) {
            const CheckOutcome bound = check_index_bound(e.analysis);
            const CheckOutcome gap = check_degree_gap_bound(e.analysis);
            if (bound.unknown || gap.unknown) {
                ++skipped;
                continue;
            }
            if (bound.failed() || gap.failed()) {
                ++failures;
                std::cout << "witness: " << json_of(bound).dump() << "\n";
            }
        }
        c.detail << "decided " << (corpus.size() - skipped) << "/" << corpus.size();
        require(c, failures == 0, "lower bound violated");
        require(c, skipped <= static_cast<int>(corpus.size()) / 10,
                "too many skipped instances");
    });

    timed(criterion(10), 0.0, [&](Criterion& c) {
        int betti_checked = 0, betti_bad = 0;
        for (std::size_t i = 0; i < corpus.size() && betti_checked < 100; ++i) {
            try {
                const BettiTable koszul = betti_table(corpus[i].factor, field, caps);
                const BettiTable taylor = taylor_oracle(corpus[i].factor, field, caps);
                ++betti_checked;
                if (!koszul.same_entries(taylor) || koszul.pd != taylor.pd ||
                    koszul.depth != taylor.depth)
                    ++betti_bad;
            } catch (const ResourceCapError&) {
            }
        }
        require(c, betti_checked == 100, "fewer than 100 comparable instances");
        require(c, betti_bad == 0, "Betti routes disagree");

        int brute_checked = 0, brute_bad = 0;
        for (const CorpusEntry& e : corpus) {
            const FactorPoset poset = build_poset(e.factor, caps);
            if (static_cast<int>(poset.points.size()) > caps.brute_points_max)
                continue;
            if (!e.analysis.sdepth_factor.known()) continue;
            ++brute_checked;
            if (sdepth_bruteforce(poset, caps) != *e.analysis.sdepth_factor.value)
                ++brute_bad;
        }
        c.detail << "betti " << betti_checked << ", brute " << brute_checked;
        require(c, brute_bad == 0, "search disagrees with exhaustive reference");
        require(c, brute_checked > 0, "no bruteforce-sized instances");
    });

    timed(criterion(11), 120000.0, [&](Criterion& c) {
        for (int n = 3; n <= 5; ++n) {
            std::string text;
            for (int i = 1; i <= n; ++i) {
                if (i > 1) text += ", ";
                text += "x" + std::to_string(i);
            }
            const FactorModule f = parse_factor(text, "0", n);
            const SdepthResult r = sdepth(f, caps);
            require(c, r.exact, "value undecided at n=" + std::to_string(n));
            require(c, r.value == (n + 1) / 2,
                    "value off at n=" + std::to_string(n));
            if (n == 3)
                require(c, sdepth_bruteforce(build_poset(f, caps), caps) == 2,
                        "exhaustive reference at n=3");
        }
    });

    timed(criterion(12), 0.0, [&](Criterion& c) {
        int failures = 0, skipped = 0, fired = 0;
        for (const CorpusEntry& e : corpus) {
            for (const CheckOutcome& out :
                 {check_depth_bound_at_index_succ(e.analysis),
                  check_sdepth_at_index_forces_depth(e.analysis)}) {
                if (out.unknown) {
                    ++skipped;
                    continue;
                }
                if (out.hypothesis_held) ++fired;
                if (out.failed()) {
                    ++failures;
                    std::cout << "witness: " << json_of(out).dump() << "\n";
                }
            }
        }
        c.detail << "hypotheses fired " << fired << ", skipped " << skipped;
        require(c, failures == 0, "implication violated");
    });

    bool all_pass = true;
    for (const Criterion& c : g_criteria) {
        all_pass = all_pass && c.pass;
        std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL");
        const std::string detail = c.detail.str();
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << " [" << static_cast<long long>(c.ms) << " ms]\n";
    }
    return all_pass ? 0 : 1;
}
