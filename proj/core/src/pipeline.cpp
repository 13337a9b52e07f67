#include "hampat/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hampat/absorber.hpp"
#include "hampat/embed.hpp"
#include "hampat/errors.hpp"
#include "hampat/instances.hpp"
#include "hampat/oracle.hpp"
#include "hampat/random.hpp"

namespace hampat {

std::string_view to_string(SolveStatus s) noexcept {
    switch (s) {
        case SolveStatus::solved: return "solved";
        case SolveStatus::refused: return "refused";
        case SolveStatus::failed: return "failed";
    }
    return "unknown";
}

bool SolvePlan::consistent() const noexcept {
    if (paths == 0) return false;
    const std::size_t connection = 2 + paths * (k - 1) + 2 * (paths - 1) + 2 * leftover + z_walk + 2;
    return t + connection == n && a + reservoir + rest == n && paths * k + leftover == rest &&
           paths + leftover + z_walk + 1 == covered && reservoir == kept + covered + 2;
}

std::optional<SolvePlan> make_plan(std::size_t n, std::size_t k, double epsilon, std::size_t kept,
                                   std::size_t covered, std::size_t template_edges) {
    SolvePlan p;
    p.n = n;
    p.k = k;
    p.epsilon = epsilon;
    p.kept = kept;
    p.covered = covered;
    p.template_edges = template_edges;
    if (k < 2 || kept == 0 || 4 * template_edges + 1 < kept) return std::nullopt;
    p.t = 4 * template_edges + 2;
    p.a = 4 * template_edges + 1 - kept;
    p.reservoir = kept + covered + 2;
    if (p.a + p.reservoir + k > n) return std::nullopt;
    p.rest = n - p.a - p.reservoir;
    p.part = p.rest / k;
    p.paths = static_cast<std::size_t>(std::floor((1.0 - epsilon) * static_cast<double>(p.part) + 1e-9));
    if (p.paths == 0) return std::nullopt;
    p.leftover = p.rest - p.paths * k;
    if (covered < p.paths + p.leftover + 1) return std::nullopt;
    p.z_walk = covered - p.paths - p.leftover - 1;
    return p;
}

namespace {

// Absorbed share of the reservoir relative to alpha when beta is not given.
constexpr double kDefaultBetaPerAlpha = 0.01;

std::size_t estimated_template_edges(std::size_t m, std::size_t removed, const RmbgOptions& o) {
    const std::size_t xs = 3 * m;
    const std::size_t yd = std::min(xs, o.y_degree ? o.y_degree : std::size_t{12});
    const std::size_t zd = std::min(xs, o.z_degree);
    return 2 * m * yd + zd * (m + removed);
}

struct Connection {
    std::vector<Vertex> vertices;  // after z2, before z1
    std::vector<ColourSegment> segments;
    std::vector<Vertex> leftover_z;
};

// The walk z2 -> ... -> z1 in colours t..n-1: a cherry into each path,
// cherries through each leftover vertex, single steps into the reservoir,
// and a final cherry into z1. Cherry middles and walk steps come from
// reservoir \ {z1, z2}.
Connection connect(const GraphCollection& h, const SolvePlan& plan, const VertexSet& reservoir, Vertex z1, Vertex z2,
                   const std::vector<ColouredWalk>& paths, const std::vector<Vertex>& leftovers) {
    const std::size_t n = h.order();
    Connection out;
    VertexSet free = reservoir;
    free.reset(z1);
    free.reset(z2);
    const VertexSet none(n);
    Vertex end = z2;
    auto colour = static_cast<Colour>(plan.t);
    const auto last = static_cast<Colour>(n - 2);

    auto final_possible = [&](Vertex from, const VertexSet& pool) {
        VertexSet c = h[last].row(from) & h[last + 1].row(z1);
        c &= pool;
        c.reset(from);
        return !c.none();
    };
    auto take = [&](Vertex v) {
        out.vertices.push_back(v);
        free.reset(v);
    };

    for (const auto& p : paths) {
        const Vertex mid = cherry_connect(h, colour, colour + 1, end, p.front(), free, none);
        take(mid);
        out.segments.push_back({"cherry", colour, 2});
        out.vertices.insert(out.vertices.end(), p.vertices.begin(), p.vertices.end());
        out.segments.push_back({"path", colour + 2u, plan.k - 1});
        colour = static_cast<Colour>(colour + plan.k + 1);
        end = p.back();
    }

    std::vector<Vertex> pending = leftovers;
    for (std::size_t step = 0; step < plan.leftover; ++step) {
        const bool before_final = step + 1 == plan.leftover && plan.z_walk == 0;
        bool placed = false;
        for (std::size_t idx = 0; idx < pending.size() && !placed; ++idx) {
            const Vertex v = pending[idx];
            VertexSet c = h[colour].row(end) & h[colour + 1].row(v);
            c &= free;
            for (std::size_t z = c.first(); z != VertexSet::npos; z = c.next(z + 1)) {
                if (before_final) {
                    VertexSet pool = free;
                    pool.reset(z);
                    if (!final_possible(v, pool)) continue;
                }
                take(static_cast<Vertex>(z));
                out.vertices.push_back(v);
                end = v;
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(idx));
                placed = true;
                break;
            }
        }
        if (!placed) throw StageFailure("connect", "no reservoir cherry for any leftover vertex at colour " + std::to_string(colour));
        out.segments.push_back({"leftover", colour, 2});
        colour = static_cast<Colour>(colour + 2);
    }

    for (std::size_t step = 0; step < plan.z_walk; ++step) {
        const bool before_final = step + 1 == plan.z_walk;
        VertexSet c = h[colour].row(end) & free;
        std::size_t pick = VertexSet::npos;
        for (std::size_t z = c.first(); z != VertexSet::npos; z = c.next(z + 1)) {
            if (before_final) {
                VertexSet pool = free;
                pool.reset(z);
                if (!final_possible(static_cast<Vertex>(z), pool)) continue;
            }
            pick = z;
            break;
        }
        if (pick == VertexSet::npos) throw StageFailure("connect", "reservoir walk stalled at colour " + std::to_string(colour));
        take(static_cast<Vertex>(pick));
        end = static_cast<Vertex>(pick);
        out.segments.push_back({"reservoir-walk", colour, 1});
        ++colour;
    }

    if (colour != last) throw std::logic_error("connect: colour bookkeeping drifted");
    const Vertex mid = cherry_connect(h, last, last + 1, end, z1, free, none);
    take(mid);
    out.segments.push_back({"final-cherry", last, 2});
    out.leftover_z = free.to_vector();
    return out;
}

SolveResult refuse(SolveResult r, std::string message) {
    r.status = SolveStatus::refused;
    r.message = std::move(message);
    r.failed_stage = "precheck";
    r.trace.stage("precheck").ok = false;
    r.trace.stage("precheck").detail = r.message;
    return r;
}

}  // namespace

SolveResult solve(const GraphCollection& g, const ColourPattern& chi, const SolveOptions& opts) {
    const std::size_t n = g.order();
    if (chi.size() != n) throw std::invalid_argument("solve: pattern length must equal n");
    chi.validate(g.colours());
    const SolverParams& params = opts.params;
    params.validate();

    SolveResult res;
    res.trace.n = n;
    res.trace.stages.reserve(16);
    auto& pre = res.trace.stage("precheck");
    pre.attempts = 1;
    const std::size_t delta = min_collection_degree(g);
    pre.set("min_degree", static_cast<double>(delta));
    double alpha = 0.0;
    if (params.alpha) {
        alpha = *params.alpha;
        const std::size_t need = dirac_degree_target(n, alpha);
        if (delta < need)
            return refuse(std::move(res), "minimum degree " + std::to_string(delta) + " is below " + std::to_string(need) +
                                              " = ceil((1/2 + alpha) n); the exact oracle can decide small cases");
    } else {
        alpha = static_cast<double>(delta) / static_cast<double>(n) - 0.5;
        if (alpha <= 0.0)
            return refuse(std::move(res), "minimum degree " + std::to_string(delta) +
                                              " is not above n/2; the exact oracle can decide small cases");
    }
    pre.set("alpha", alpha);
    pre.ok = true;

    if (n <= opts.small_threshold) {
        auto& st = res.trace.stage("oracle");
        st.attempts = 1;
        const OracleResult o = exact_solve(g, chi, {opts.oracle_budget, false});
        st.set("nodes", static_cast<double>(o.nodes));
        st.detail = std::string(to_string(o.status));
        if (o.status == OracleStatus::found && verify_pattern_cycle(g, chi, *o.cycle)) {
            st.ok = true;
            res.status = SolveStatus::solved;
            res.cycle = o.cycle;
            res.trace.cycle = o.cycle;
            res.trace.colour_segments.push_back({"oracle", 0, n});
            res.message = "solved by exhaustive search";
            return res;
        }
        res.status = SolveStatus::failed;
        res.failed_stage = "oracle";
        res.message = "exhaustive search: " + st.detail;
        return res;
    }

    const GraphCollection h = reduce_pattern_to_identity(g, chi);
    const std::size_t k = params.k_part;
    const double epsilon = params.epsilon.value_or(alpha / 4.0);
    const double beta = params.beta.value_or(alpha * kDefaultBetaPerAlpha);
    const std::size_t kept = std::max<std::size_t>(1, reservoir_size(n, beta));

    // Plan: smallest covered count g whose plan closes, with a real
    // template's edge count.
    auto& plan_stage = res.trace.stage("plan");
    plan_stage.attempts = 1;
    std::optional<SolvePlan> plan;
    RmbgTemplate tpl;
    std::string plan_error = "instance too small for the absorber";
    {
        const std::size_t fixed = params.gamma ? std::max<std::size_t>(1, reservoir_size(n, *params.gamma)) : 0;
        for (std::size_t covered = fixed ? fixed : 1; covered < n; ++covered) {
            const std::size_t est_edges = estimated_template_edges(kept, covered, opts.rmbg);
            if (4 * est_edges + 1 - kept + kept + covered + 2 + k > n) break;
            const auto est = make_plan(n, k, epsilon, kept, covered, est_edges);
            if (!fixed && (!est || est->z_walk < opts.min_z_walk)) continue;
            try {
                const double tpl_beta = static_cast<double>(covered) / static_cast<double>(kept);
                tpl = build_rmbg(kept, tpl_beta, mix_seed(params.seed, 0x7e3), opts.rmbg).tpl;
            } catch (const StageFailure& e) {
                plan_error = e.what();
                break;
            }
            const auto actual = make_plan(n, k, epsilon, kept, covered, tpl.edge_count());
            if (actual && (fixed || actual->z_walk >= opts.min_z_walk)) {
                plan = actual;
                break;
            }
            if (fixed) {
                plan_error = "gamma too small: the connections need more reservoir vertices";
                break;
            }
        }
    }
    if (!plan) {
        plan_stage.ok = false;
        plan_stage.detail = plan_error;
        res.status = SolveStatus::failed;
        res.failed_stage = "plan";
        res.message = plan_error;
        return res;
    }
    plan_stage.ok = true;
    for (const auto& [key, value] : std::initializer_list<std::pair<const char*, double>>{
             {"alpha", alpha},
             {"epsilon", epsilon},
             {"K", static_cast<double>(k)},
             {"kept", static_cast<double>(plan->kept)},
             {"covered", static_cast<double>(plan->covered)},
             {"template_edges", static_cast<double>(plan->template_edges)},
             {"t", static_cast<double>(plan->t)},
             {"a", static_cast<double>(plan->a)},
             {"reservoir", static_cast<double>(plan->reservoir)},
             {"rest", static_cast<double>(plan->rest)},
             {"paths", static_cast<double>(plan->paths)},
             {"leftover", static_cast<double>(plan->leftover)},
             {"z_walk", static_cast<double>(plan->z_walk)}})
        plan_stage.set(key, value);

    // Path i, edge j has colour t + 2 + i(K+1) + j.
    std::vector<std::vector<Colour>> patterns(plan->paths, std::vector<Colour>(k - 1));
    std::vector<std::vector<Colour>> interface_colours(k - 1);
    for (std::size_t i = 0; i < plan->paths; ++i)
        for (std::size_t j = 0; j + 1 < k; ++j) {
            patterns[i][j] = static_cast<Colour>(plan->t + 2 + i * (k + 1) + j);
            interface_colours[j].push_back(patterns[i][j]);
        }

    std::string current;
    for (int attempt = 1; attempt <= params.max_retries; ++attempt) {
        const std::uint64_t seed = mix_seed(params.seed, static_cast<std::uint64_t>(attempt));
        try {
            current = "reservoir";
            auto& rs_stage = res.trace.stage(current);
            ++rs_stage.attempts;
            const ReservoirSample rs =
                sample_reservoir(h, plan->reservoir, opts.reservoir_margin, mix_seed(seed, 1), params.max_retries);
            rs_stage.ok = true;
            rs_stage.set("samples", rs.attempts);
            rs_stage.set("worst_ratio", rs.audit.worst_ratio);
            const auto zs = rs.reservoir.to_vector();
            const Vertex z1 = zs[0];
            const Vertex z2 = zs[1];

            current = "absorber";
            auto& ab_stage = res.trace.stage(current);
            ++ab_stage.attempts;
            const AbsorberStructure absorber =
                build_absorbing_structure(h, rs.reservoir, z1, z2, tpl, {0, mix_seed(seed, 2), 3});
            ab_stage.ok = true;
            ab_stage.set("gadgets", static_cast<double>(absorber.gadgets.size()));
            ab_stage.set("size", static_cast<double>(absorber.a()));

            current = "partition";
            auto& pa_stage = res.trace.stage(current);
            ++pa_stage.attempts;
            std::vector<Vertex> rest;
            for (Vertex v = 0; v < n; ++v)
                if (!absorber.absorbing_set.test(v) && !rs.reservoir.test(v)) rest.push_back(v);
            if (rest.size() != plan->rest) throw std::logic_error("solve: vertex accounting drifted");
            const PartitionSample ps = random_balanced_partition(rest, k, h, opts.partition_margin, mix_seed(seed, 3),
                                                                 params.max_retries, interface_colours);
            pa_stage.ok = true;
            pa_stage.set("worst_ratio", ps.audit.worst_ratio);
            pa_stage.set("samples", ps.attempts);

            current = "path_cover";
            auto& pc_stage = res.trace.stage(current);
            ++pc_stage.attempts;
            const PathCover cover =
                path_builder(h, ps.partition.parts, patterns, mix_seed(seed, 4), {opts.abort_rule, true});
            pc_stage.ok = true;
            pc_stage.set("steps", static_cast<double>(cover.steps.size()));
            if (!cover.steps.empty())
                pc_stage.set("last_min_degree_ratio", static_cast<double>(cover.steps.back().min_interface_degree) /
                                                          static_cast<double>(cover.steps.back().part_size));

            current = "connect";
            auto& co_stage = res.trace.stage(current);
            ++co_stage.attempts;
            VertexSet on_paths(n);
            for (const auto& p : cover.paths)
                for (Vertex v : p.vertices) on_paths.set(v);
            std::vector<Vertex> leftovers;
            for (Vertex v : rest)
                if (!on_paths.test(v)) leftovers.push_back(v);
            const Connection conn = connect(h, *plan, rs.reservoir, z1, z2, cover.paths, leftovers);
            co_stage.ok = true;
            co_stage.set("z_covered", static_cast<double>(plan->covered));
            co_stage.set("z_size", static_cast<double>(plan->reservoir));

            current = "absorb";
            auto& as_stage = res.trace.stage(current);
            ++as_stage.attempts;
            const ColouredWalk inner = absorb(absorber, conn.leftover_z);
            as_stage.ok = true;

            ColouredWalk cycle;
            cycle.closed = true;
            cycle.vertices = inner.vertices;
            cycle.vertices.insert(cycle.vertices.end(), conn.vertices.begin(), conn.vertices.end());
            cycle.colours = chi.colours;
            current = "verify";
            auto& ve_stage = res.trace.stage(current);
            ++ve_stage.attempts;
            const WalkVerdict verdict = verify_pattern_cycle(g, chi, cycle);
            if (!verdict) {
                ve_stage.detail = std::string(to_string(verdict.reason)) + " at " + std::to_string(verdict.position);
                throw StageFailure("verify", ve_stage.detail);
            }
            ve_stage.ok = true;

            res.trace.colour_segments.push_back({"absorber", 0, plan->t});
            res.trace.colour_segments.insert(res.trace.colour_segments.end(), conn.segments.begin(), conn.segments.end());
            res.trace.cycle = cycle;
            res.cycle = std::move(cycle);
            res.status = SolveStatus::solved;
            res.failed_stage.clear();
            res.message = "solved on attempt " + std::to_string(attempt);
            return res;
        } catch (const StageFailure& e) {
            auto& st = res.trace.stage(current);
            st.ok = false;
            st.detail = e.what();
            res.failed_stage = current;
            res.message = e.what();
        }
    }
    res.status = SolveStatus::failed;
    res.message = "retries exhausted; last failure in " + res.failed_stage + ": " + res.message;
    return res;
}

}  // namespace hampat
