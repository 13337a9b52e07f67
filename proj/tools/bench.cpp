#include "bench.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hampat/instances.hpp"
#include "hampat/oracle.hpp"
#include "hampat/pipeline.hpp"
#include "hampat/random.hpp"

namespace hampat::cli {

namespace {

enum class Source { dirac, identical, counterexample };

struct BenchCase {
    std::string name;
    Source source;
    std::size_t n;
    std::size_t m;
    double alpha;
    PatternKind pattern;
};

std::vector<BenchCase> cases_for(const std::string& suite) {
    std::vector<BenchCase> out;
    auto dirac_grid = [&](std::initializer_list<std::size_t> sizes, std::size_t m) {
        for (std::size_t n : sizes)
            for (auto kind : {PatternKind::identity, PatternKind::random, PatternKind::alternating, PatternKind::block})
                out.push_back({"dirac-" + std::to_string(n) + "-" + std::string(to_string(kind)), Source::dirac, n, m, 0.2,
                               kind});
    };
    if (suite == "smoke") {
        out.push_back({"dirac-500-random", Source::dirac, 500, 8, 0.2, PatternKind::random});
        out.push_back({"identical-500-identity", Source::identical, 500, 500, 0.2, PatternKind::identity});
    } else if (suite == "dirac") {
        dirac_grid({500, 1000}, 16);
        out.push_back({"identical-1000-identity", Source::identical, 1000, 1000, 0.2, PatternKind::identity});
    } else if (suite == "alpha") {
        for (double a : {0.1, 0.15, 0.2, 0.3})
            out.push_back({"dirac-600-a" + std::to_string(a).substr(0, 4), Source::dirac, 600, 8, a, PatternKind::random});
    } else if (suite == "counterexample") {
        for (std::size_t n : {6, 8, 10, 12})
            out.push_back({"counterexample-" + std::to_string(n), Source::counterexample, n, 2, 0.0, PatternKind::block});
    } else {
        throw std::invalid_argument("unknown bench suite '" + suite + "'");
    }
    return out;
}

BenchRow run_case(const BenchCase& c, std::uint64_t seed) {
    BenchRow row{c.name, c.n, c.m, c.alpha, 8, seed, "", "", 0, 0.0};
    const auto start = std::chrono::steady_clock::now();
    GraphCollection g(0, {});
    ColourPattern chi;
    switch (c.source) {
        case Source::dirac:
            g = gen_random_dirac(c.n, c.m, c.alpha, mix_seed(seed, 11));
            chi = gen_pattern(c.pattern, c.n, c.m, mix_seed(seed, 12));
            break;
        case Source::identical:
            g = gen_identical(gen_random_dirac(c.n, 1, c.alpha, mix_seed(seed, 11))[0], c.m);
            chi = gen_pattern(c.pattern, c.n, c.m, mix_seed(seed, 12));
            break;
        case Source::counterexample: {
            Instance inst = gen_counterexample(c.n);
            g = inst.graphs;
            chi = *inst.pattern;
            break;
        }
    }
    SolveOptions opts;
    opts.params.seed = seed;
    const SolveResult r = solve(g, chi, opts);
    row.stage = r.status == SolveStatus::solved ? "done" : r.failed_stage;
    row.outcome = std::string(to_string(r.status));
    if (const auto* st = r.trace.find("reservoir")) row.retries = st->attempts;
    if (r.status == SolveStatus::solved && !verify_pattern_cycle(g, chi, *r.cycle)) row.outcome = "unverified";
    if (r.status != SolveStatus::solved && c.n <= 14) {
        // Separate "proved absent" from "pipeline gave up".
        const OracleResult o = exact_solve(g, chi);
        if (o.status != OracleStatus::found) {
            row.stage = "oracle";
            row.outcome = std::string(to_string(o.status));
        }
    }
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

std::vector<std::string> bench_suites() { return {"smoke", "dirac", "alpha", "counterexample"}; }

std::vector<BenchRow> run_bench(const std::string& suite, std::size_t seeds, std::size_t jobs) {
    const auto cases = cases_for(suite);
    const std::size_t total = cases.size() * seeds;
    std::vector<BenchRow> rows(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            const auto& c = cases[i / seeds];
            try {
                rows[i] = run_case(c, i % seeds);
            } catch (const std::exception& e) {
                rows[i] = BenchRow{c.name, c.n, c.m, c.alpha, 8, i % seeds, "error", "error", 0, 0.0};
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < std::max<std::size_t>(jobs, 1); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kBenchHeader << '\n';
    for (const auto& r : rows)
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.alpha << ',' << r.k << ',' << r.seed << ',' << r.stage
            << ',' << r.outcome << ',' << r.retries << ',' << std::fixed << std::setprecision(1) << r.ms
            << std::defaultfloat << '\n';
}

}  // namespace hampat::cli
