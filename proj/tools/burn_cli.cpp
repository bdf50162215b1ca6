// Command-line front end: solve / verify / bound / gen / bench.
//
// Graph inputs are edge-list files or "paths ..." path-forest files; '-'
// reads standard input. All output is deterministic for fixed flags and
// seed; wall-clock timing is opt-in (--timing) so default output stays
// byte-stable.
//
// Exit codes: 0 ok, 1 input/parse error, 2 semantic failure (incomplete or
// strict-invalid schedule, solver cap exceeded without a fallback).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burn/approx_general.hpp"
#include "burn/approx_tree.hpp"
#include "burn/bincover.hpp"
#include "burn/common.hpp"
#include "burn/exact.hpp"
#include "burn/generate.hpp"
#include "burn/graph.hpp"
#include "burn/ptas_paths.hpp"
#include "burn/schedule.hpp"

namespace {

struct LoadedInput {
    burn::Graph graph;
    std::optional<burn::PathForest> forest;  // set when the input was a paths file
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw burn::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_paths(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        auto line = burn::detail::strip_cr(raw);
        if (line.empty() || line[0] == '#') continue;
        auto toks = burn::detail::split_ws(line);
        if (toks.empty()) continue;
        return toks[0] == "paths";
    }
    return false;
}

LoadedInput load_input(const std::string& path) {
    const std::string text = read_all(path);
    LoadedInput li;
    if (looks_like_paths(text)) {
        std::istringstream in(text);
        li.forest = burn::parse_path_forest(in);
        li.graph = burn::expand_forest(*li.forest);
    } else {
        std::istringstream in(text);
        li.graph = burn::parse_graph(in);
    }
    return li;
}

// Forest plus the map from the canonical expanded layout to input vertex
// ids (identity when the input was a paths file).
std::pair<burn::PathForest, std::vector<int>> require_forest(const LoadedInput& li) {
    if (li.forest) {
        std::vector<int> identity(static_cast<std::size_t>(li.graph.n()));
        for (int v = 0; v < li.graph.n(); ++v) identity[static_cast<std::size_t>(v)] = v;
        return {*li.forest, std::move(identity)};
    }
    return burn::recover_forest_layout(li.graph);  // throws InputError if not a path forest
}

void remap(burn::BurningSchedule& s, const std::vector<int>& to_input) {
    for (int& a : s.activators) a = to_input[static_cast<std::size_t>(a)];
}

std::vector<int> make_order(const burn::Graph& g, const std::string& spec) {
    if (spec == "asc") return burn::ascending_order(g.n());
    if (spec.rfind("random:", 0) == 0) {
        std::uint64_t seed = std::stoull(spec.substr(7));
        return burn::shuffled_order(g.n(), seed);
    }
    throw burn::ParseError("bad --order (want asc or random:SEED)");
}

struct SolveOptions {
    std::string algo = "auto";
    double eps = 0.5;
    double alpha = 3.0;
    std::string order = "asc";
    int root = -1;
    std::string search = "binary";
    std::string out;
    bool timing = false;
    int oracle_cap = 12;
    int oracle_path_cap = 40;
    std::uint64_t dp_state_cap = 20'000'000;
    std::string input;
};

void emit_schedule(const SolveOptions& opt, const burn::BurningSchedule& s, int rounds) {
    if (opt.out.empty()) return;
    if (opt.out == "-") {
        burn::write_schedule(std::cout, s, rounds);
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw burn::ParseError("cannot open " + opt.out);
    burn::write_schedule(out, s, rounds);
}

int run_solve(const SolveOptions& opt) {
    const LoadedInput li = load_input(opt.input);
    const burn::Graph& g = li.graph;
    const auto mode = opt.search == "linear" ? burn::SearchMode::linear : burn::SearchMode::binary;
    if (opt.search != "linear" && opt.search != "binary")
        throw burn::ParseError("bad --search (want linear or binary)");

    std::string algo = opt.algo;
    if (algo == "auto") {
        const auto shape = burn::classify(g);
        if (g.n() > 0 && shape.kind == burn::GraphKind::path_forest) {
            const auto f = require_forest(li).first;
            bool dp_ok = true;
            std::uint64_t bound = static_cast<std::uint64_t>(f.path_count());
            for (int l : f.lengths) {
                if (bound > opt.dp_state_cap / static_cast<std::uint64_t>(l + 1) + 1) { dp_ok = false; break; }
                bound *= static_cast<std::uint64_t>(l + 1);
            }
            if (bound > opt.dp_state_cap) dp_ok = false;
            if (dp_ok) {
                algo = "path-dp";
            } else if (f.path_count() >= 2 &&
                       f.lengths.back() <= 2 * f.lengths.front()) {
                algo = "fptas";
            } else {
                algo = "ptas";
            }
        } else if (shape.kind == burn::GraphKind::single_tree) {
            algo = "tree2";
        } else {
            algo = "greedy3";
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    burn::BurningSchedule schedule;
    int rounds = 0;
    std::string lower_bound;
    std::string certified;
    std::string ratio;
    std::string counter_key;
    std::uint64_t counter_value = 0;
    std::string extra;  // per-algorithm audit lines

    if (algo == "greedy3") {
        auto order = make_order(g, opt.order);
        auto res = burn::approx3(g, mode, &order);
        schedule = res.schedule;
        rounds = res.rounds;
        lower_bound = std::to_string(res.opt_lower_bound);
        certified = "yes";
        ratio = res.ratio_bound.str();
        counter_key = "traversals";
        counter_value = res.edge_traversals;
    } else if (algo == "tree2") {
        auto res = burn::approx2(g, opt.root, mode);
        schedule = res.schedule;
        rounds = res.rounds;
        lower_bound = std::to_string(res.opt_lower_bound);
        certified = "yes";
        ratio = res.ratio_bound.str();
        counter_key = "guess";
        counter_value = static_cast<std::uint64_t>(res.accepted_guess);
    } else if (algo == "exact") {
        burn::OracleCaps caps;
        caps.general_vertex_cap = opt.oracle_cap;
        caps.path_forest_vertex_cap = opt.oracle_path_cap;
        auto res = burn::exact_burning_number(g, caps);
        schedule = res.schedule;
        rounds = res.burning_number;
        lower_bound = std::to_string(res.burning_number);
        certified = "yes";
        ratio = "1";
        counter_key = "search_nodes";
        counter_value = res.work_units;
    } else if (algo == "path-dp") {
        auto [f, map] = require_forest(li);
        auto res = burn::path_dp(f, burn::DpCaps{opt.dp_state_cap});
        schedule = res.schedule;
        remap(schedule, map);
        rounds = res.burning_number;
        lower_bound = std::to_string(res.burning_number);
        certified = "yes";
        ratio = "1";
        counter_key = "dp_states";
        counter_value = res.work_units;
    } else if (algo == "fptas") {
        auto [f, map] = require_forest(li);
        burn::FptasResult res;
        bool exact_solver = true;
        try {
            res = burn::fptas_driver(f, opt.eps, burn::CoverMode::exact);
        } catch (const burn::CapExceeded&) {
            exact_solver = false;
            res = burn::fptas_driver(f, opt.eps, burn::CoverMode::greedy);
        }
        schedule = res.approx.schedule;
        remap(schedule, map);
        rounds = res.approx.rounds;
        lower_bound = std::to_string(res.approx.opt_lower_bound);
        certified = exact_solver ? "yes" : "no";
        ratio = exact_solver ? res.approx.ratio_bound.str() : "uncertified";
        counter_key = "cover_nodes";
        counter_value = res.cover_nodes;
        {
            std::ostringstream audit;
            audit << "k_star " << res.k_star << '\n'
                  << "c_star " << res.c_star << '\n'
                  << "eps0 " << res.eps0 << '\n';
            extra = audit.str();
        }
        if (res.regularity_warning)
            std::cerr << "warning: c* = " << res.c_star
                      << " >= 0.9; the (1+eps) analysis degrades on this instance\n";
    } else if (algo == "ptas") {
        auto [f, map] = require_forest(li);
        auto res = burn::ptas_driver(f, opt.eps, opt.alpha);
        schedule = res.approx.schedule;
        remap(schedule, map);
        rounds = res.approx.rounds;
        lower_bound = std::to_string(res.approx.opt_lower_bound);
        certified = res.approx.lower_bound_certified ? "yes" : "no";
        ratio = res.approx.ratio_bound.str();
        counter_key = "decide_states";
        counter_value = res.decide_states;
    } else {
        throw burn::ParseError("unknown --algo " + algo);
    }
    const auto t1 = std::chrono::steady_clock::now();

    // Every report's rounds figure is re-derived from the emitted schedule.
    auto check = burn::simulate(g, schedule);
    if (check.completion_round != rounds || (g.n() > 0 && !check.complete))
        throw std::logic_error("report/schedule mismatch");

    std::cout << "algorithm " << algo << '\n'
              << "n " << g.n() << '\n'
              << "m " << g.m << '\n'
              << "rounds " << rounds << '\n'
              << "lower_bound " << lower_bound << '\n'
              << "certified " << certified << '\n'
              << "ratio_bound " << ratio << '\n'
              << extra
              << counter_key << ' ' << counter_value << '\n';
    if (opt.timing)
        std::cout << "micros "
                  << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() << '\n';
    emit_schedule(opt, schedule, rounds);
    return 0;
}

int run_verify(const std::string& input, const std::string& schedule_path, bool strict) {
    const LoadedInput li = load_input(input);
    const std::string text = read_all(schedule_path);
    std::istringstream in(text);
    const burn::BurningSchedule s = burn::parse_schedule(in);
    const auto outcome = burn::simulate(li.graph, s);
    for (int v = 0; v < li.graph.n(); ++v) {
        std::cout << "burn_time " << v << ' ';
        if (outcome.burn_time[static_cast<std::size_t>(v)] == burn::kUnreached)
            std::cout << "never\n";
        else
            std::cout << outcome.burn_time[static_cast<std::size_t>(v)] << '\n';
    }
    std::cout << "rounds " << outcome.completion_round << '\n'
              << "complete " << (outcome.complete ? "yes" : "no") << '\n';
    bool ok = outcome.complete;
    if (strict) {
        const bool valid = burn::validate_strict(li.graph, s);
        std::cout << "strict " << (valid ? "valid" : "invalid") << '\n';
        ok = ok && valid;
    }
    return ok ? 0 : 2;
}

int run_bound(const std::string& input) {
    const LoadedInput li = load_input(input);
    const burn::Graph& g = li.graph;
    burn::DistanceCertificate best;
    auto order = burn::ascending_order(g.n());
    for (int gv = 1; gv <= g.n() + 1; ++gv) {
        auto res = burn::burn_guess(g, gv, order);
        if (res.accepted) break;
        if (res.certificate.r > best.r) best = res.certificate;
    }
    std::cout << "r " << best.r << '\n' << "witnesses";
    for (int w : best.witnesses) std::cout << ' ' << w;
    std::cout << '\n'
              << "verified " << (best.r == 0 || burn::verify_certificate(g, best) ? "yes" : "no")
              << '\n';
    return 0;
}

struct GenOptions {
    std::string type;
    int n = 10;
    double p = 0.5;
    int k = 3;
    int b = 3;
    int min_len = 1;
    int max_len = 10;
    std::uint64_t seed = 1;
};

int run_gen(const GenOptions& opt) {
    if (opt.type == "paths") {
        auto f = burn::gen_path_forest(opt.b, opt.min_len, opt.max_len, opt.seed);
        std::cout << "paths";
        for (int len : f.lengths) std::cout << ' ' << len;
        std::cout << '\n';
        return 0;
    }
    burn::Graph g;
    if (opt.type == "gnp") g = burn::gen_gnp(opt.n, opt.p, opt.seed);
    else if (opt.type == "tree") g = burn::gen_random_tree(opt.n, opt.seed);
    else if (opt.type == "gadget") g = burn::gen_gadget(opt.k);
    else throw burn::ParseError("unknown --type " + opt.type);
    std::cout << "n " << g.n() << '\n';
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (v < w) std::cout << v << ' ' << w << '\n';
    return 0;
}

struct BenchOptions {
    std::string algo = "greedy3";
    std::string sizes = "1000,10000";
    double avg_deg = 20.0;
    std::uint64_t seed = 1;
};

int run_bench(const BenchOptions& opt) {
    if (opt.algo != "greedy3") throw burn::ParseError("bench supports --algo greedy3");
    std::istringstream ss(opt.sizes);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const int n = std::stoi(tok);
        const double p = n > 1 ? std::min(1.0, opt.avg_deg / static_cast<double>(n - 1)) : 0.0;
        const auto g = burn::gen_gnp(n, p, opt.seed);
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = burn::approx3(g);
        const auto t1 = std::chrono::steady_clock::now();
        std::cout << n << ' ' << g.m << ' ' << res.rounds << ' ' << res.opt_lower_bound << ' '
                  << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() << ' '
                  << res.edge_traversals << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph burning toolkit"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "compute a burning schedule");
    solve->add_option("--algo", solve_opt.algo, "auto|exact|greedy3|tree2|path-dp|fptas|ptas");
    solve->add_option("--eps", solve_opt.eps, "approximation parameter for fptas/ptas");
    solve->add_option("--alpha", solve_opt.alpha, "short-path threshold multiplier (ptas)");
    solve->add_option("--order", solve_opt.order, "asc or random:SEED (greedy3)");
    solve->add_option("--root", solve_opt.root, "root vertex (tree2)");
    solve->add_option("--search", solve_opt.search, "linear or binary guess search");
    solve->add_option("--out", solve_opt.out, "schedule output file ('-' for stdout)");
    solve->add_flag("--timing", solve_opt.timing, "append a micros line to the report");
    solve->add_option("--oracle-cap", solve_opt.oracle_cap, "exact solver vertex cap, general graphs");
    solve->add_option("--oracle-path-cap", solve_opt.oracle_path_cap, "exact solver vertex cap, path forests");
    solve->add_option("--dp-state-cap", solve_opt.dp_state_cap, "path-dp table bound cap");
    solve->add_option("input", solve_opt.input, "graph file or '-'")->required();

    std::string verify_input, verify_schedule;
    bool verify_strict = false;
    auto* verify = app.add_subcommand("verify", "re-simulate a schedule");
    verify->add_option("--schedule", verify_schedule, "schedule file")->required();
    verify->add_flag("--strict", verify_strict, "also enforce the strict pairwise condition");
    verify->add_option("input", verify_input, "graph file or '-'")->required();

    std::string bound_input;
    auto* bound = app.add_subcommand("bound", "largest distance certificate from Bad-Guess sweeps");
    bound->add_option("input", bound_input, "graph file or '-'")->required();

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--type", gen_opt.type, "gnp|tree|paths|gadget")->required();
    gen->add_option("--n", gen_opt.n, "vertex count (gnp, tree)");
    gen->add_option("--p", gen_opt.p, "edge probability (gnp)");
    gen->add_option("--k", gen_opt.k, "gadget parameter");
    gen->add_option("--b", gen_opt.b, "path count (paths)");
    gen->add_option("--min-len", gen_opt.min_len, "minimum path length (paths)");
    gen->add_option("--max-len", gen_opt.max_len, "maximum path length (paths)");
    gen->add_option("--seed", gen_opt.seed, "rng seed");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "timing/instrumentation rows over G(n,p)");
    bench->add_option("--algo", bench_opt.algo, "algorithm (greedy3)");
    bench->add_option("--sizes", bench_opt.sizes, "comma-separated vertex counts");
    bench->add_option("--avg-deg", bench_opt.avg_deg, "target average degree");
    bench->add_option("--seed", bench_opt.seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(solve_opt);
        if (*verify) return run_verify(verify_input, verify_schedule, verify_strict);
        if (*bound) return run_bound(bound_input);
        if (*gen) return run_gen(gen_opt);
        if (*bench) return run_bench(bench_opt);
    } catch (const burn::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const burn::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const burn::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
