#include "hampat/path_cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "hampat/matching.hpp"
#include "hampat/random.hpp"

namespace hampat {

PathCover path_builder(const GraphCollection& g, std::vector<std::vector<Vertex>> parts,
                       const std::vector<std::vector<Colour>>& patterns, std::uint64_t seed,
                       const PathBuilderOptions& opts) {
    const std::size_t k = parts.size();
    if (k < 2) throw std::invalid_argument("path_builder: need at least two parts");
    const std::size_t n = g.order();

    PathCover out;
    std::size_t size = SIZE_MAX;
    for (const auto& p : parts) size = std::min(size, p.size());
    VertexSet seen(n);
    for (auto& p : parts) {
        std::sort(p.begin(), p.end());
        for (Vertex v : p) {
            if (v >= n || seen.test(v)) throw std::invalid_argument("path_builder: parts must be disjoint vertex sets");
            seen.set(v);
        }
        out.trimmed.insert(out.trimmed.end(), p.begin() + static_cast<std::ptrdiff_t>(size), p.end());
        p.resize(size);
    }
    if (patterns.size() > size) throw std::invalid_argument("path_builder: more paths requested than part size");
    for (const auto& chi : patterns) {
        if (chi.size() != k - 1) throw std::invalid_argument("path_builder: each pattern needs K-1 colours");
        for (Colour c : chi)
            if (c >= g.colours()) throw std::invalid_argument("path_builder: pattern colour out of range");
    }

    Rng rng(seed);
    std::vector<Matching> matchings(k - 1);
    for (std::size_t step = 0; step < patterns.size(); ++step) {
        const std::size_t ni = parts[0].size();
        StepStats stats;
        stats.part_size = ni;
        stats.min_interface_degree = ni;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            const Graph& graph = g[patterns[step][j]];
            const auto& left = parts[j];
            const auto& right = parts[j + 1];
            BipartiteGraph bg(ni, ni);
            std::vector<std::size_t> right_deg(ni, 0);
            for (std::uint32_t l = 0; l < ni; ++l)
                for (std::uint32_t r = 0; r < ni; ++r)
                    if (graph.has_edge(left[l], right[r])) {
                        bg.add_edge(l, r);
                        ++right_deg[r];
                    }
            std::size_t low = ni;
            for (const auto& row : bg.adj) low = std::min(low, row.size());
            for (auto d : right_deg) low = std::min(low, d);
            stats.min_interface_degree = std::min(stats.min_interface_degree, low);

            auto abort_with = [&](const PerfectMatchingResult& pm) {
                std::vector<Vertex> witness;
                for (auto l : pm.hall_witness) witness.push_back(left[l]);
                out.steps.push_back(stats);
                throw PathBuilderAbort(step, j, std::move(witness), std::move(out.steps));
            };
            if (opts.rule == AbortRule::min_degree && 2 * low < ni) {
                abort_with(perfect_matching(bg));
            }
            auto pm = perfect_matching(bg);
            if (!pm.found()) abort_with(pm);
            matchings[j] = std::move(*pm.matching);
        }

        // Follow the matchings from every vertex of V_1; with perfect
        // matchings this is a partition into ni paths of K vertices.
        std::vector<std::vector<std::uint32_t>> routes(ni, std::vector<std::uint32_t>(k));
        for (std::uint32_t start = 0; start < ni; ++start) {
            routes[start][0] = start;
            for (std::size_t j = 0; j + 1 < k; ++j) routes[start][j + 1] = matchings[j].left_to_right[routes[start][j]];
        }
        if (opts.check_union) {
            for (std::size_t j = 0; j < k && stats.union_ok; ++j) {
                std::vector<char> hit(ni, 0);
                for (const auto& r : routes) {
                    if (r[j] >= ni || hit[r[j]]) {
                        stats.union_ok = false;
                        break;
                    }
                    hit[r[j]] = 1;
                }
            }
        }
        out.steps.push_back(stats);
        if (!stats.union_ok) throw std::logic_error("path_builder: matchings do not form a path factor");

        const auto chosen = routes[uniform_below(rng, ni)];
        ColouredWalk path;
        path.vertices.reserve(k);
        for (std::size_t j = 0; j < k; ++j) path.vertices.push_back(parts[j][chosen[j]]);
        path.colours = patterns[step];
        out.paths.push_back(std::move(path));
        for (std::size_t j = 0; j < k; ++j) parts[j].erase(parts[j].begin() + chosen[j]);
    }
    return out;
}

}  // namespace hampat
