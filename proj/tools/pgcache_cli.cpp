// Command-line front end: construct the schemes, verify and simulate
// delivery, export PDAs and transcripts, evaluate rate lower bounds, and
// regenerate the comparison tables.

#include "pgcache/bounds.hpp"
#include "pgcache/delivery.hpp"
#include "pgcache/errors.hpp"
#include "pgcache/extensions.hpp"
#include "pgcache/pda.hpp"
#include "pgcache/scheme_a.hpp"
#include "pgcache/scheme_b.hpp"
#include "pgcache/tables.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace pgcache;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct SchemeOptions {
    std::string family;  // a | b | b-general | c
    unsigned k = 0, m = 0, t = 1, n = 1, l = 1, q = 2;
    std::string lambda;  // scheme c, "p/q" or decimal numerator/denominator
    uint64_t cap = kDefaultEnumCap;
};

Rational parse_rational(const std::string& text) {
    // cpp_int's string constructor treats a leading 0 as octal, so strip it
    auto decimal = [](std::string s) {
        bool neg = !s.empty() && s.front() == '-';
        if (neg) s.erase(s.begin());
        while (s.size() > 1 && s.front() == '0') s.erase(s.begin());
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ArgumentError("not a number: " + s);
        BigInt v(s);
        return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Rational(decimal(text.substr(0, slash)), decimal(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(decimal(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(decimal(digits), den);
}

void add_scheme_flags(CLI::App* cmd, SchemeOptions& opt, bool with_family = true) {
    if (with_family)
        cmd->add_option("--scheme", opt.family, "scheme family: a | b | b-general | c")->required();
    cmd->add_option("-k,--k", opt.k, "ambient dimension");
    cmd->add_option("-m,--m", opt.m, "m parameter");
    cmd->add_option("-t,--t", opt.t, "t parameter (scheme a)");
    cmd->add_option("-n,--n", opt.n, "n parameter (scheme b)");
    cmd->add_option("-l,--l", opt.l, "generator dimension (generalized scheme b)");
    cmd->add_option("-q,--q", opt.q, "field order (prime power)");
    cmd->add_option("--lambda", opt.lambda, "cache fraction lambda (scheme c)");
    cmd->add_option("--cap", opt.cap, "enumeration cap override");
    cmd->add_flag_callback(
        "--force-build", [&opt] { opt.cap = UINT64_MAX; },
        "lift the enumeration cap entirely");
}

// builds the requested scheme as a graph + cover, whatever the family
struct Built {
    CachingGraph graph;
    MatchingCover cover;
    SchemeReport report;
};

SchemeReport params_only(const SchemeOptions& opt) {
    if (opt.family == "a") return scheme_a_params({opt.k, opt.m, opt.t, opt.q});
    if (opt.family == "b") return scheme_b_params({opt.k, opt.n, opt.m, 1, opt.q});
    if (opt.family == "b-general") return scheme_b_params({opt.k, opt.n, opt.m, opt.l, opt.q});
    if (opt.family == "c") return scheme_c_params(opt.q, parse_rational(opt.lambda)).report;
    throw ArgumentError("unknown scheme family: " + opt.family);
}

Built build(const SchemeOptions& opt) {
    if (opt.family == "a") {
        auto s = build_scheme_a({opt.k, opt.m, opt.t, opt.q}, opt.cap);
        return {std::move(s.graph), std::move(s.cover), std::move(s.report)};
    }
    SchemeBParams p{opt.k, opt.n, opt.m, opt.l, opt.q};
    if (opt.family == "b") p.l = 1;
    if (opt.family == "c") {
        SchemeCReport c = scheme_c_params(opt.q, parse_rational(opt.lambda));
        p = SchemeBParams{c.k, c.n, c.n, 1, c.q};
    } else if (opt.family != "b" && opt.family != "b-general") {
        throw ArgumentError("unknown scheme family: " + opt.family);
    }
    auto s = build_scheme_b(p, opt.cap);
    return {std::move(s.graph), std::move(s.cover), std::move(s.report)};
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ArgumentError("cannot open output file: " + path);
    return os;
}

DemandVector make_demands(const std::string& mode, uint32_t users, uint32_t files, uint64_t seed) {
    if (mode == "worst") return DemandVector::worst_case(users, files);
    if (mode == "random") return DemandVector::uniform_random(users, files, seed);
    if (mode.rfind("constant:", 0) == 0)
        return DemandVector::constant(users, static_cast<uint32_t>(std::stoul(mode.substr(9))));
    throw ArgumentError("unknown demand mode: " + mode + " (use worst|random|constant:<i>)");
}

int run(int argc, char** argv) {
    CLI::App app{"projective-geometry coded caching toolkit"};
    app.require_subcommand(1);

    SchemeOptions opt;
    std::string out_path, demand_mode = "worst";
    uint64_t seed = 0;
    unsigned subfile_size = 64;
    std::optional<unsigned> n_files;
    bool as_json = false, dump_payloads = false;

    auto* construct = app.add_subcommand("construct", "build a scheme, print its parameters");
    add_scheme_flags(construct, opt);
    construct->add_option("-o,--output", out_path, "write graph/cover JSON here");
    construct->add_flag("--json", as_json, "machine-readable report");
    construct->callback([&] {
        SchemeReport report = params_only(opt);
        if (!out_path.empty()) {
            Built b = build(opt);
            report = b.report;
            auto os = open_out(out_path);
            write_scheme_json(b.graph, b.cover, os);
        }
        if (as_json) {
            nlohmann::json j{{"K", report.users_k.str()},
                             {"F", report.subfiles_f.str()},
                             {"D", report.left_degree_d.str()},
                             {"S", report.transmissions_s.str()},
                             {"g", report.matching_size_g.str()},
                             {"MN", render_ratio(report.cache_fraction)},
                             {"R", render_ratio(report.rate)},
                             {"gain", report.gain.str()}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << report.one_line() << "\n";
        }
    });

    auto* simulate = app.add_subcommand("simulate", "run placement, delivery and decoding");
    add_scheme_flags(simulate, opt);
    simulate->add_option("--demands", demand_mode, "worst | random | constant:<file>");
    simulate->add_option("--seed", seed, "library / demand seed");
    simulate->add_option("--subfile-size", subfile_size, "bytes per subfile");
    simulate->add_option("-N,--files", n_files, "library size (default K)");
    simulate->add_option("-o,--output", out_path, "write transcript JSON lines here");
    simulate->add_flag("--dump-payloads", dump_payloads, "include raw payload hex");
    simulate->add_flag("--json", as_json, "machine-readable summary");
    simulate->callback([&] {
        Built b = build(opt);
        uint32_t users = b.graph.num_users();
        uint32_t files = n_files.value_or(users);
        FileLibrary lib =
            FileLibrary::random(files, b.graph.num_subfiles(), subfile_size, seed);
        DemandVector demands = make_demands(demand_mode, users, files, seed + 1);
        Transcript t = deliver(b.graph, b.cover, lib, demands);
        decode_all(b.graph, lib, demands, t);  // throws on any mismatch
        auto [rate, gain] = measure(t, lib, b.report.users_k, b.report.cache_fraction);
        if (!out_path.empty()) {
            auto os = open_out(out_path);
            write_transcript_jsonl(t, b.graph, os, dump_payloads);
        }
        if (as_json) {
            nlohmann::json j{{"transmissions", t.transmissions.size()},
                             {"rate", render_ratio(rate)},
                             {"gain", render_ratio(gain)},
                             {"bits", t.bits_sent},
                             {"decoded", users}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "transmissions=" << t.transmissions.size() << " rate="
                      << render_ratio(rate) << " gain=" << render_ratio(gain)
                      << " bits=" << t.bits_sent << " decoded=" << users << "/" << users << "\n";
        }
    });

    auto* pda = app.add_subcommand("pda", "export the scheme's placement delivery array");
    add_scheme_flags(pda, opt);
    pda->add_option("-o,--output", out_path, "CSV path")->required();
    pda->callback([&] {
        Built b = build(opt);
        Pda p = cover_to_pda(b.graph, b.cover);
        auto os = open_out(out_path);
        write_pda_csv(p, os);
        PdaParams params = validate_pda(p);
        std::cout << "PDA K=" << params.k << " F=" << params.f << " Z=" << params.z
                  << " S=" << params.s << " g=" << (params.g ? std::to_string(*params.g) : "-")
                  << " -> " << out_path << "\n";
    });

    std::string mn_text;
    std::string big_k, big_f, big_d;
    auto* bounds = app.add_subcommand("bounds", "rate lower bounds for given K, F, M/N");
    bounds->add_option("-K", big_k, "number of users")->required();
    bounds->add_option("-F", big_f, "subpacketization")->required();
    bounds->add_option("--mn", mn_text, "cache fraction as p/q or decimal");
    bounds->add_option("-D", big_d, "missing subfiles per user (alternative to --mn)");
    bounds->add_flag("--json", as_json, "machine-readable report");
    bounds->callback([&] {
        BigInt K(big_k), F(big_f);
        Rational mn;
        if (!mn_text.empty())
            mn = parse_rational(mn_text);
        else if (!big_d.empty())
            mn = 1 - Rational(BigInt(big_d), F);
        else
            throw ArgumentError("need --mn or -D");
        Rational c2 = bound_corollary2(K, F, mn);
        Rational t6 = bound_theorem6(K, F, mn);
        Rational ch = bound_cheng(K, F, mn);
        Rational wtp = bound_wtp(K, mn);
        if (as_json) {
            nlohmann::json j{{"corollary2", to_decimal(c2, 4)},
                             {"theorem6", to_decimal(t6, 4)},
                             {"cheng", to_decimal(ch, 4)},
                             {"wtp", to_decimal(wtp, 4)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "corollary2=" << render_ratio(c2) << " theorem6=" << render_ratio(t6)
                      << " cheng=" << render_ratio(ch) << " wtp=" << render_ratio(wtp) << "\n";
        }
    });

    std::string out_dir = ".";
    auto* tables = app.add_subcommand("tables", "regenerate the comparison tables as CSV");
    tables->add_option("-o,--output-dir", out_dir, "directory for tableN.csv files");
    tables->callback([&] {
        std::filesystem::create_directories(out_dir);
        const std::pair<const char*, std::string (*)()> files[] = {
            {"table3.csv", table3_csv}, {"table4.csv", table4_csv}, {"table6.csv", table6_csv},
            {"table7.csv", table7_csv}, {"table8.csv", table8_csv},
        };
        for (auto [name, fn] : files) {
            auto os = open_out((std::filesystem::path(out_dir) / name).string());
            os << fn();
            std::cout << name << "\n";
        }
    });

    std::string users_wanted, mn_avail;
    unsigned plan_max_k = 8, plan_max_l = 2;
    auto* plan = app.add_subcommand("plan", "search (k,n,m,l,q) for a user/cache target");
    plan->add_option("--users", users_wanted, "required number of users K'")->required();
    plan->add_option("--mn", mn_avail, "available cache fraction")->required();
    plan->add_option("--max-k", plan_max_k, "grid bound on k");
    plan->add_option("--max-l", plan_max_l, "grid bound on l");
    plan->callback([&] {
        PlanGrid grid;
        grid.max_k = plan_max_k;
        grid.max_l = plan_max_l;
        auto candidates = plan_parameters(BigInt(users_wanted), parse_rational(mn_avail), grid);
        std::cout << "q,k,n,m,l,K,MN,F,R,gain,extra_users,unused_cache\n";
        for (const auto& c : candidates)
            std::cout << c.params.q << "," << c.params.k << "," << c.params.n << "," << c.params.m
                      << "," << c.params.l << "," << c.report.users_k.str() << ","
                      << to_decimal(c.report.cache_fraction, 4) << ","
                      << c.report.subfiles_f.str() << "," << to_decimal(c.report.rate, 4) << ","
                      << c.report.gain.str() << "," << c.user_excess.str() << ","
                      << to_decimal(c.cache_slack, 4) << "\n";
    });

    auto* cdc = app.add_subcommand("cdc", "distributed-computing adaptation parameters");
    add_scheme_flags(cdc, opt, /*with_family=*/false);
    cdc->callback([&] {
        CdcParams c = cdc_from_scheme_b({opt.k, opt.n, opt.m, opt.l, opt.q}, opt.cap);
        std::cout << "nodes=" << c.nodes.str() << " computation_load="
                  << render_ratio(c.computation_load) << " batches=" << c.batches.str()
                  << " communication_load=" << to_decimal(c.communication_load, 4)
                  << (c.assignment_built ? " assignment=built" : " assignment=closed-form-only")
                  << "\n";
    });

    unsigned ic_L = 1, ic_trials = 1;
    std::optional<uint32_t> ic_kt;
    auto* ic = app.add_subcommand("ic", "interference-channel adaptation + zero-forcing check");
    ic->add_option("-k,--k", opt.k, "ambient dimension")->required();
    ic->add_option("-m,--m", opt.m, "m parameter")->required();
    ic->add_option("-q,--q", opt.q, "field order")->required();
    ic->add_option("-L,--group-size", ic_L, "receivers per group")->required();
    ic->add_option("--kt", ic_kt, "number of transmitters");
    ic->add_option("-N,--files", n_files, "library size (default K_R)");
    ic->add_option("--seed", seed, "channel seed");
    ic->add_option("--trials", ic_trials, "zero-forcing rounds to check");
    ic->add_option("--cap", opt.cap, "enumeration cap override");
    ic->callback([&] {
        IcParams p = ic_scheme(opt.k, opt.m, opt.q, ic_L, ic_kt, n_files, opt.cap);
        std::cout << "K_R=" << p.receivers.str() << " M_R/N=" << to_decimal(p.receiver_cache_fraction, 4)
                  << " F=" << p.subpacketization.str() << " sum_dof=" << p.sum_dof
                  << " K_T=" << p.transmitters << " M_T=" << p.transmitter_files
                  << " rounds=" << p.rounds.size() << "\n";
        DemandVector demands =
            DemandVector::uniform_random(p.receiver_count(), p.n_files, seed + 1);
        double worst = 0;
        for (unsigned i = 0; i < std::min<size_t>(ic_trials, p.rounds.size()); ++i) {
            ZfRound r = zero_force_round_seeded(p, i, demands.files, seed);
            worst = std::max(worst, r.max_residual);
        }
        std::cout << "zero-forcing max residual over " << std::min<size_t>(ic_trials, p.rounds.size())
                  << " rounds: " << worst << "\n";
        if (worst > 1e-9) throw DecodeError("zero-forcing residual above 1e-9");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // prints help or the parse error; normalize failures to the usage code
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pgcache::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
