#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bench.hpp"
#include "hampat/errors.hpp"
#include "hampat/gadget.hpp"
#include "hampat/instances.hpp"
#include "hampat/oracle.hpp"
#include "hampat/pipeline.hpp"
#include "hampat/random.hpp"
#include "hampat/rmbg.hpp"

namespace {

using namespace hampat;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void dump(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

// Instances without a pattern are only meaningful when m == n.
ColourPattern pattern_of(const Instance& inst) {
    if (inst.pattern) return *inst.pattern;
    if (inst.graphs.colours() != inst.graphs.order())
        throw UsageError("instance has no pattern and m != n");
    return ColourPattern::identity(inst.graphs.order());
}

struct GenerateArgs {
    std::string kind = "random-dirac";
    std::size_t n = 0;
    std::size_t m = 1;
    double alpha = 0.2;
    std::uint64_t seed = 0;
    std::string out;
    std::string pattern;
};

int run_generate(const GenerateArgs& a) {
    Instance inst{GraphCollection(0, {}), std::nullopt};
    if (a.kind == "counterexample") {
        inst = gen_counterexample(a.n);
    } else if (a.kind == "random-dirac") {
        inst.graphs = gen_random_dirac(a.n, a.m, a.alpha, a.seed);
    } else if (a.kind == "identical") {
        inst.graphs = gen_identical(gen_random_dirac(a.n, 1, a.alpha, a.seed)[0], a.m);
    } else {
        throw UsageError("unknown kind '" + a.kind + "'");
    }
    if (!a.pattern.empty()) {
        const auto kind = parse_pattern_kind(a.pattern);
        if (!kind) throw UsageError("unknown pattern '" + a.pattern + "'");
        inst.pattern = gen_pattern(*kind, a.n, inst.graphs.colours(), mix_seed(a.seed, 1));
    }
    const std::string json = instance_to_json(inst);
    if (a.out.empty())
        std::cout << json;
    else
        dump(a.out, json);
    std::cerr << "n=" << inst.graphs.order() << " m=" << inst.graphs.colours()
              << " min_degree=" << min_collection_degree(inst.graphs) << '\n';
    return kOk;
}

struct SolveArgs {
    std::string in;
    SolveOptions opts;
    std::string abort_rule = "hall";
    std::string trace;
    std::string out;
    bool audit = false;
};

int run_solve(SolveArgs& a) {
    const Instance inst = load_instance(a.in);
    const ColourPattern chi = pattern_of(inst);
    if (a.abort_rule == "hall")
        a.opts.abort_rule = AbortRule::hall;
    else if (a.abort_rule == "min-degree")
        a.opts.abort_rule = AbortRule::min_degree;
    else
        throw UsageError("unknown abort rule '" + a.abort_rule + "'");

    const SolveResult r = solve(inst.graphs, chi, a.opts);
    if (!a.trace.empty()) dump(a.trace, trace_to_json(r.trace));
    if (a.audit) std::cerr << audit_run(r.trace).text;
    if (r.status != SolveStatus::solved) {
        std::cerr << to_string(r.status);
        if (!r.failed_stage.empty()) std::cerr << " at " << r.failed_stage;
        std::cerr << ": " << r.message << '\n';
        std::cout << to_string(r.status) << '\n';
        return kFail;
    }
    const std::string json = walk_to_json(*r.cycle);
    if (a.out.empty())
        std::cout << json;
    else
        dump(a.out, json);
    std::cerr << "solved n=" << inst.graphs.order() << '\n';
    return kOk;
}

int run_verify(const std::string& in, const std::string& cycle) {
    const Instance inst = load_instance(in);
    const ColourPattern chi = pattern_of(inst);
    const ColouredWalk w = walk_from_json(slurp(cycle));
    const WalkVerdict v = verify_pattern_cycle(inst.graphs, chi, w);
    if (v) {
        std::cout << "ok\n";
        return kOk;
    }
    std::cout << to_string(v.reason) << " at " << v.position << '\n';
    return kFail;
}

struct OracleArgs {
    std::string in;
    std::uint64_t budget = 50'000'000;
    bool count = false;
    bool any_rotation = false;
    std::string out;
};

int run_oracle(const OracleArgs& a) {
    const Instance inst = load_instance(a.in);
    const ColourPattern chi = pattern_of(inst);
    if (a.count) {
        const CountResult c = count_solutions(inst.graphs, chi, a.budget);
        std::cout << to_string(c.status) << " count=" << c.count << " sequences=" << c.sequences
                  << " symmetries=" << c.symmetries << " nodes=" << c.nodes << '\n';
        return c.status == OracleStatus::budget_exhausted ? kFail : kOk;
    }
    OracleOptions opts;
    opts.budget = a.budget;
    opts.any_rotation = a.any_rotation;
    const OracleResult r = exact_solve(inst.graphs, chi, opts);
    std::cout << to_string(r.status);
    if (a.any_rotation && r.cycle) std::cout << " rotation=" << r.rotation;
    std::cout << " nodes=" << r.nodes << '\n';
    if (r.status != OracleStatus::found) return kFail;
    if (!a.out.empty()) dump(a.out, walk_to_json(*r.cycle));
    return kOk;
}

struct GadgetArgs {
    std::size_t ell = 0;
    bool check_routes = false;
    bool rmbg = false;
    std::size_t m = 0;
    double beta = 0.0;
    std::uint64_t seed = 0;
    std::string cache;
};

int check_routes(std::size_t ell) {
    const GadgetTemplate tpl(ell);
    const auto& edges = tpl.pattern().edges;
    const std::size_t routes = ell + 1;
    for (std::size_t i = 1; i <= routes; ++i) {
        const ColouredWalk w = gadget_absorb_route(tpl, i);
        bool ok = w.well_formed() && w.edge_count() == tpl.colour_count() && w.front() == tpl.b(0) &&
                  w.back() == tpl.b(3 * ell + 1);
        for (std::size_t j = 0; ok && j < w.edge_count(); ++j) {
            const Edge e = w.edge(j);
            ok = w.colours[j] == j && std::any_of(edges.begin(), edges.end(), [&](const ColouredEdge& c) {
                     return c.colour == j && ((c.u == e.u && c.v == e.v) || (c.u == e.v && c.v == e.u));
                 });
        }
        for (Vertex v : w.vertices)
            if (ok && tpl.role(v) == GadgetRole::a) ok = v == tpl.a(i);
        if (!ok) {
            std::cout << "route " << i << " broken\n";
            return kFail;
        }
    }
    std::cout << routes << " routes verified, " << edges.size() << " edges, colours 1.." << tpl.colour_count()
              << '\n';
    return kOk;
}

int run_gadget(const GadgetArgs& a) {
    if (a.rmbg) {
        if (a.m == 0 || a.beta <= 0.0) throw UsageError("--rmbg needs --m and --beta");
        RmbgTemplate tpl;
        RobustnessReport report;
        int attempts = 0;
        if (!a.cache.empty()) {
            tpl = cached_rmbg(a.cache, a.m, a.beta, a.seed);
            const RmbgOptions o;
            report = verify_robustness(tpl, o.exhaustive_budget, o.samples, a.seed);
        } else {
            RmbgBuild b = build_rmbg(a.m, a.beta, a.seed);
            tpl = std::move(b.tpl);
            report = b.report;
            attempts = b.attempts;
        }
        std::cout << "rmbg m=" << tpl.m << " |X|=" << tpl.x_count() << " |Y|=" << tpl.y_count()
                  << " |Z|=" << tpl.z_count() << " removed=" << tpl.removed() << " edges=" << tpl.edge_count()
                  << " degree=" << tpl.min_degree() << ".." << tpl.max_degree()
                  << " robustness=" << (report.ok ? "ok" : "FAILED")
                  << (report.exhaustive ? " exhaustive" : " sampled") << " checked=" << report.checked;
        if (attempts > 0) std::cout << " attempts=" << attempts;
        std::cout << '\n';
        return report.ok ? kOk : kFail;
    }
    if (a.ell == 0) throw UsageError("--ell is required");
    if (a.check_routes) return check_routes(a.ell);
    const GadgetTemplate tpl(a.ell);
    const auto order = gadget_degeneracy_order(tpl);
    std::cout << "gadget ell=" << a.ell << " vertices=" << tpl.order() << " edges=" << tpl.pattern().edges.size()
              << " colours=" << tpl.colour_count() << " back-degree=" << max_back_degree(tpl.pattern(), order)
              << '\n';
    return kOk;
}

struct BenchArgs {
    std::string suite = "smoke";
    std::size_t seeds = 3;
    std::size_t jobs = 1;
    std::string csv;
};

int run_bench_cmd(const BenchArgs& a) {
    const auto rows = cli::run_bench(a.suite, a.seeds, a.jobs);
    if (a.csv.empty()) {
        cli::write_csv(std::cout, rows);
    } else {
        std::ofstream out(a.csv);
        if (!out) throw UsageError("cannot write '" + a.csv + "'");
        cli::write_csv(out, rows);
    }
    std::size_t solved = 0, absent = 0;
    for (const auto& r : rows) {
        solved += r.outcome == "solved";
        absent += r.stage == "oracle" && r.outcome == "no-solution";
    }
    std::cerr << solved << "/" << rows.size() << " solved, " << absent << " proved absent\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern Hamilton cycles in graph collections"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "write a random instance");
    generate->add_option("--kind", gen.kind)->check(CLI::IsMember({"random-dirac", "counterexample", "identical"}));
    generate->add_option("--n", gen.n)->required();
    generate->add_option("--m", gen.m);
    generate->add_option("--alpha", gen.alpha);
    generate->add_option("--seed", gen.seed);
    generate->add_option("--out", gen.out);
    generate->add_option("--pattern", gen.pattern, "identity|random|alternating|block|constant");

    SolveArgs sol;
    std::optional<double> alpha, beta, gamma, epsilon;
    auto* solve_cmd = app.add_subcommand("solve", "construct a pattern cycle");
    solve_cmd->add_option("--in", sol.in)->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--seed", sol.opts.params.seed);
    solve_cmd->add_option("--alpha", alpha);
    solve_cmd->add_option("--beta", beta);
    solve_cmd->add_option("--gamma", gamma);
    solve_cmd->add_option("--epsilon", epsilon);
    solve_cmd->add_option("--K", sol.opts.params.k_part);
    solve_cmd->add_option("--retries", sol.opts.params.max_retries);
    solve_cmd->add_option("--abort-rule", sol.abort_rule);
    solve_cmd->add_option("--small-threshold", sol.opts.small_threshold);
    solve_cmd->add_option("--reservoir-margin", sol.opts.reservoir_margin);
    solve_cmd->add_option("--trace", sol.trace);
    solve_cmd->add_option("--out", sol.out);
    solve_cmd->add_flag("--audit", sol.audit);

    std::string verify_in, verify_cycle;
    auto* verify = app.add_subcommand("verify", "check a cycle against an instance");
    verify->add_option("--in", verify_in)->required()->check(CLI::ExistingFile);
    verify->add_option("--cycle", verify_cycle)->required()->check(CLI::ExistingFile);

    OracleArgs orc;
    auto* oracle = app.add_subcommand("oracle", "exact search on small instances");
    oracle->add_option("--in", orc.in)->required()->check(CLI::ExistingFile);
    oracle->add_option("--budget", orc.budget);
    oracle->add_flag("--count", orc.count);
    oracle->add_flag("--any-rotation", orc.any_rotation);
    oracle->add_option("--out", orc.out);

    GadgetArgs gad;
    auto* gadget = app.add_subcommand("gadget", "inspect absorber building blocks");
    gadget->add_option("--ell", gad.ell);
    gadget->add_flag("--check-routes", gad.check_routes);
    gadget->add_flag("--rmbg", gad.rmbg);
    gadget->add_option("--m", gad.m);
    gadget->add_option("--beta", gad.beta);
    gadget->add_option("--seed", gad.seed);
    gadget->add_option("--cache", gad.cache);

    BenchArgs ben;
    auto* bench = app.add_subcommand("bench", "run a benchmark grid and emit CSV");
    bench->add_option("--suite", ben.suite)->check(CLI::IsMember(cli::bench_suites()));
    bench->add_option("--seeds", ben.seeds);
    bench->add_option("--jobs", ben.jobs);
    bench->add_option("--csv", ben.csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*solve_cmd) {
            sol.opts.params.alpha = alpha;
            sol.opts.params.beta = beta;
            sol.opts.params.gamma = gamma;
            sol.opts.params.epsilon = epsilon;
            return run_solve(sol);
        }
        if (*verify) return run_verify(verify_in, verify_cycle);
        if (*oracle) return run_oracle(orc);
        if (*gadget) return run_gadget(gad);
        if (*bench) return run_bench_cmd(ben);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
