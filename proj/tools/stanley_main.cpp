#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "stanley/errors.hpp"
#include "stanley/fuzz.hpp"
#include "stanley/golden.hpp"
#include "stanley/parse.hpp"
#include "stanley/serialize.hpp"
#include "stanley/taylor.hpp"

namespace {

using namespace stanley;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
    std::string ideal;
    std::string mod = "0";
    int n = 0;  // 0: take the largest index seen
    std::int64_t field_char = 0;
    bool json = false;
    std::string caps_spec;
};

EngineCaps parse_caps(const std::string& spec) {
    EngineCaps caps;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value in --caps", 0);
        const std::string key = item.substr(0, eq);
        const long long value = std::stoll(item.substr(eq + 1));
        if (key == "koszul_n")
            caps.koszul_n_max = static_cast<int>(value);
        else if (key == "box_volume")
            caps.box_volume_max = value;
        else if (key == "taylor_gens")
            caps.taylor_gens_max = static_cast<int>(value);
        else if (key == "brute_points")
            caps.brute_points_max = static_cast<int>(value);
        else if (key == "node_budget")
            caps.sdepth_node_budget = value;
        else
            throw ParseError("unknown cap '" + key + "'", 0);
    }
    return caps;
}

FactorModule load_factor(const CommonOptions& opt) {
    std::optional<int> n;
    if (opt.n > 0) n = opt.n;
    return parse_factor(opt.ideal, opt.mod, n);
}

FieldSpec load_field(const CommonOptions& opt) {
    if (opt.field_char != 0 && !is_prime(opt.field_char))
        throw ParseError("--field must be 0 or a prime", 0);
    return FieldSpec{opt.field_char};
}

void print_value(const char* label, const EngineValue& v, std::ostream& out) {
    out << label << ": ";
    if (v.known())
        out << *v.value << " (" << v.engine << ")";
    else
        out << "unknown (cap exceeded)";
    out << "\n";
}

int cmd_analyze(const CommonOptions& opt) {
    const FactorModule f = load_factor(opt);
    const InstanceAnalysis a = analyze_instance(f, load_field(opt), parse_caps(opt.caps_spec));
    const std::vector<CheckOutcome> checks;  // analyze reports values only
    if (opt.json) {
        std::cout << instance_report(a, checks).dump() << "\n";
        return kExitOk;
    }
    std::cout << "factor: " << to_text(a.factor) << "\n";
    std::cout << "e: (";
    for (std::size_t i = 0; i < a.invariants.e_per_var.size(); ++i)
        std::cout << (i ? "," : "") << a.invariants.e_per_var[i];
    std::cout << ")  e_total: " << a.invariants.e_total << "\n";
    std::cout << "d: " << a.invariants.d_min << "  r: " << a.invariants.r_count
              << "  t: " << a.invariants.index_t << "\n";
    std::cout << "canonical form: " << to_text(a.canonical) << "\n";
    std::cout << "polarization: " << to_text(a.polarized) << "\n";
    std::cout << "polarization map: " << json_of(a.polarization).dump() << "\n";
    print_value("depth", a.depth_factor, std::cout);
    print_value("sdepth", a.sdepth_factor, std::cout);
    if (a.sdepth_witness)
        std::cout << "witness: " << json_of(*a.sdepth_witness).dump() << "\n";
    return kExitOk;
}

int cmd_depth(const CommonOptions& opt, bool use_oracle) {
    const FactorModule f = load_factor(opt);
    const FieldSpec field = load_field(opt);
    const EngineCaps caps = parse_caps(opt.caps_spec);
    const BettiTable table =
        use_oracle ? taylor_oracle(f, field, caps) : betti_table(f, field, caps);
    if (opt.json) {
        Json j{{"input", Json{{"I", to_text(f.ideal_I)}, {"J", to_text(f.ideal_J)}}},
               {"n", f.ambient_n()},
               {"field", field.characteristic},
               {"pd", table.pd},
               {"depth", table.depth}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_report(table);
    }
    return kExitOk;
}

int cmd_sdepth(const CommonOptions& opt) {
    const FactorModule f = load_factor(opt);
    const EngineCaps caps = parse_caps(opt.caps_spec);
    const SdepthResult r = sdepth(f, caps);
    if (opt.json) {
        Json j{{"input", Json{{"I", to_text(f.ideal_I)}, {"J", to_text(f.ideal_J)}}},
               {"n", f.ambient_n()},
               {"sdepth", r.exact ? Json(r.value) : Json(nullptr)},
               {"exact", r.exact},
               {"witness", json_of(r.witness)}};
        std::cout << j.dump() << "\n";
    } else {
        if (r.exact)
            std::cout << "sdepth: " << r.value << "\n";
        else
            std::cout << "sdepth: unknown (node budget); best found " << r.value << "\n";
        std::cout << "witness: " << json_of(r.witness).dump() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const CommonOptions& opt) {
    const FactorModule f = load_factor(opt);
    const InstanceAnalysis a = analyze_instance(f, load_field(opt), parse_caps(opt.caps_spec));
    const std::vector<CheckOutcome> checks = run_battery(a);
    bool failed = false;
    if (opt.json) {
        std::cout << instance_report(a, checks).dump() << "\n";
    }
    for (const CheckOutcome& c : checks) {
        failed = failed || c.failed();
        if (!opt.json) {
            std::cout << c.check_id << ": ";
            if (c.unknown)
                std::cout << "skipped (cap exceeded)";
            else if (!c.hypothesis_held)
                std::cout << "hypothesis not met";
            else
                std::cout << (*c.conclusion_held ? "ok" : "VIOLATION");
            std::cout << "\n";
        }
    }
    return failed ? kExitCheckFailed : kExitOk;
}

int cmd_golden(const CommonOptions& opt) {
    const std::vector<GoldenResult> results =
        run_golden_suite(load_field(opt), parse_caps(opt.caps_spec));
    bool all_pass = true;
    for (const GoldenResult& r : results) {
        all_pass = all_pass && r.pass;
        if (opt.json) {
            Json j{{"fixture", r.name}, {"pass", r.pass}};
            if (!r.detail.empty()) j["detail"] = r.detail;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
            if (!r.pass) std::cout << "  " << r.detail << "\n";
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_fuzz(const FuzzConfig& config, bool json) {
    SplitMix64 rng(config.seed);
    bool failed = false;
    for (int i = 0; i < config.instance_count; ++i) {
        const FactorModule f = random_factor(rng, config);
        const InstanceAnalysis a = analyze_instance(f, config.field, config.caps);
        const std::vector<CheckOutcome> checks = run_battery(a);
        for (const CheckOutcome& c : checks) failed = failed || c.failed();
        if (json) {
            Json j = instance_report(a, checks);
            j["instance"] = i;
            std::cout << j.dump() << "\n";
        } else {
            int violations = 0, skipped = 0;
            for (const CheckOutcome& c : checks) {
                if (c.failed()) ++violations;
                if (c.unknown) ++skipped;
            }
            std::cout << "instance " << i << " " << a.describe()
                      << " violations=" << violations << " skipped=" << skipped
                      << "\n";
        }
    }
    return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact depth and Stanley depth toolkit for factors of monomial ideals"};
    app.require_subcommand(1);

    CommonOptions opt;
    FuzzConfig fuzz_config;
    bool fuzz_json = false;
    std::string fuzz_caps;

    auto add_common = [&](CLI::App* sub, bool needs_ideal) {
        if (needs_ideal) {
            sub->add_option("--ideal", opt.ideal, "generators of I")->required();
            sub->add_option("--mod", opt.mod, "generators of J (default 0)");
            sub->add_option("--n", opt.n, "ambient variable count");
        }
        sub->add_option("--field", opt.field_char, "coefficient characteristic (0 or prime)");
        sub->add_option("--caps", opt.caps_spec, "resource caps, key=value comma list");
        sub->add_flag("--json", opt.json, "emit JSON lines");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "invariants, canonical form, polarization");
    add_common(analyze, true);
    CLI::App* depth_cmd = app.add_subcommand("depth", "Betti table, projective dimension, depth");
    add_common(depth_cmd, true);
    bool use_oracle = false;
    depth_cmd->add_flag("--oracle", use_oracle, "use the resolution route instead of the Koszul route");
    CLI::App* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth with witness partition");
    add_common(sdepth_cmd, true);
    CLI::App* verify = app.add_subcommand("verify", "run the checker battery on one factor");
    add_common(verify, true);
    CLI::App* golden = app.add_subcommand("golden", "run the built-in fixture suite");
    add_common(golden, false);

    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random corpus through the checker battery");
    fuzz->add_option("--seed", fuzz_config.seed, "stream seed")->required();
    fuzz->add_option("--count", fuzz_config.instance_count, "number of instances");
    fuzz->add_option("--n-max", fuzz_config.n_max, "largest ambient variable count");
    fuzz->add_option("--exp-max", fuzz_config.exponent_max, "largest exponent drawn");
    fuzz->add_option("--gen-max", fuzz_config.gen_count_max, "largest generator count");
    fuzz->add_option("--field", fuzz_config.field.characteristic, "coefficient characteristic");
    fuzz->add_option("--caps", fuzz_caps, "resource caps, key=value comma list");
    fuzz->add_flag("--json", fuzz_json, "emit JSON lines");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (depth_cmd->parsed()) return cmd_depth(opt, use_oracle);
        if (sdepth_cmd->parsed()) return cmd_sdepth(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (golden->parsed()) return cmd_golden(opt);
        if (fuzz->parsed()) {
            fuzz_config.caps = parse_caps(fuzz_caps);
            if (fuzz_config.field.characteristic != 0 &&
                !is_prime(fuzz_config.field.characteristic))
                throw ParseError("--field must be 0 or a prime", 0);
            return cmd_fuzz(fuzz_config, fuzz_json);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const FactorError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const BoxExceededError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
