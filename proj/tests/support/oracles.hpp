#pragma once

// Reference implementations used only by tests. Each one is deliberately
// dumb and shares no code with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "hampat/core.hpp"
#include "hampat/embed.hpp"
#include "hampat/gadget.hpp"
#include "hampat/matching.hpp"
#include "hampat/random.hpp"

namespace hampat::oracle_ref {

// Largest matching by trying every choice for every left vertex.
inline std::size_t brute_max_matching(const BipartiteGraph& g) {
    std::vector<bool> used(g.right, false);
    std::size_t best = 0;
    auto go = [&](auto&& self, std::size_t l, std::size_t size) -> void {
        if (size + (g.left - l) <= best) return;
        if (l == g.left) {
            best = size;
            return;
        }
        for (auto r : g.adj[l])
            if (!used[r]) {
                used[r] = true;
                self(self, l + 1, size + 1);
                used[r] = false;
            }
        self(self, l + 1, size);
    };
    go(go, 0, 0);
    return best;
}

// Kuhn's augmenting paths, one left vertex at a time. Slow and simple; the
// library uses Hopcroft-Karp.
inline std::size_t kuhn_matching_size(const BipartiteGraph& g) {
    std::vector<std::int64_t> owner(g.right, -1);
    std::size_t size = 0;
    for (std::size_t l = 0; l < g.left; ++l) {
        std::vector<bool> seen(g.right, false);
        auto augment = [&](auto&& self, std::size_t u) -> bool {
            for (auto r : g.adj[u]) {
                if (seen[r]) continue;
                seen[r] = true;
                if (owner[r] < 0 || self(self, static_cast<std::size_t>(owner[r]))) {
                    owner[r] = static_cast<std::int64_t>(u);
                    return true;
                }
            }
            return false;
        };
        size += augment(augment, l);
    }
    return size;
}

// All k-subsets of [0, n) in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    auto go = [&](auto&& self, std::uint32_t from) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    go(go, 0);
    return out;
}

// Number of vertex sequences (v_0 .. v_{n-1}), all distinct, with
// v_i v_{i+1 mod n} an edge of colour chi[i]. Subset DP per start vertex, so
// it is exponential only in n (fine to n ~ 14).
inline std::uint64_t pattern_sequences(const GraphCollection& g, const ColourPattern& chi) {
    const std::size_t n = g.order();
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> ways((full + 1) * n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(ways.begin(), ways.end(), 0);
        ways[(std::size_t{1} << s) * n + s] = 1;
        for (std::size_t mask = 1; mask <= full; ++mask) {
            if (!(mask >> s & 1)) continue;
            const auto step = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;  // edges so far
            if (step + 1 >= n) continue;
            for (std::size_t v = 0; v < n; ++v) {
                const std::uint64_t w = ways[mask * n + v];
                if (!w) continue;
                for (std::size_t u = 0; u < n; ++u)
                    if (!(mask >> u & 1) && g[chi[step]].has_edge(static_cast<Vertex>(v), static_cast<Vertex>(u)))
                        ways[(mask | std::size_t{1} << u) * n + u] += w;
            }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (g[chi[n - 1]].has_edge(static_cast<Vertex>(v), static_cast<Vertex>(s))) total += ways[full * n + v];
    }
    return total;
}

inline bool has_pattern_cycle(const GraphCollection& g, const ColourPattern& chi) {
    return pattern_sequences(g, chi) > 0;
}

// Distinct cycles by enumerating every permutation and keeping those whose
// dihedral images under chi-fixing symmetries collapse to one representative.
inline std::uint64_t permutation_cycle_count(const GraphCollection& g, const ColourPattern& chi) {
    const std::size_t n = g.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<Vertex>> seen;
    auto ok = [&](const std::vector<Vertex>& p) {
        for (std::size_t i = 0; i < n; ++i)
            if (!g[chi[i]].has_edge(p[i], p[(i + 1) % n])) return false;
        return true;
    };
    // Symmetries of the index cycle that fix chi, as maps on positions.
    std::vector<std::vector<std::size_t>> syms;
    for (std::size_t r = 0; r < n; ++r) {
        bool rot = true, ref = true;
        for (std::size_t i = 0; i < n; ++i) {
            rot = rot && chi[i] == chi[(i + r) % n];
            ref = ref && chi[i] == chi[(r + n - 1 - i) % n];
        }
        // Rotation: sequence p -> p'(i) = p(i + r). Reflection: edge i maps
        // to edge r-1-i, vertex positions i -> r - i.
        if (rot) {
            std::vector<std::size_t> s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = (i + r) % n;
            syms.push_back(s);
        }
        if (ref) {
            std::vector<std::size_t> s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = (r + n - i) % n;
            syms.push_back(s);
        }
    }
    do {
        if (!ok(perm)) continue;
        std::vector<Vertex> best = perm;
        for (const auto& s : syms) {
            std::vector<Vertex> img(n);
            for (std::size_t i = 0; i < n; ++i) img[i] = perm[s[i]];
            best = std::min(best, img);
        }
        seen.insert(best);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return seen.size();
}

// Edge-by-edge check of a coloured walk against a pattern graph.
inline bool pattern_has(const PatternGraph& p, Vertex u, Vertex v, Colour c) {
    return std::any_of(p.edges.begin(), p.edges.end(), [&](const ColouredEdge& e) {
        return e.colour == c && ((e.u == u && e.v == v) || (e.u == v && e.v == u));
    });
}

// Every simple path from `from` to `to` through exactly `allowed`, using
// colour j on edge j. Plain DFS over the pattern edge list.
inline std::vector<std::vector<Vertex>> coloured_paths(const PatternGraph& p, Vertex from, Vertex to,
                                                       const std::vector<bool>& allowed, std::size_t length) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur{from};
    std::vector<bool> on(p.order, false);
    on[from] = true;
    auto go = [&](auto&& self) -> void {
        const std::size_t j = cur.size() - 1;
        if (j == length) {
            if (cur.back() == to) out.push_back(cur);
            return;
        }
        for (const auto& e : p.edges) {
            if (e.colour != j) continue;
            Vertex next;
            if (e.u == cur.back())
                next = e.v;
            else if (e.v == cur.back())
                next = e.u;
            else
                continue;
            if (on[next] || !allowed[next]) continue;
            on[next] = true;
            cur.push_back(next);
            self(self);
            cur.pop_back();
            on[next] = false;
        }
    };
    go(go);
    return out;
}

// Random bipartite graph with each side of size n and minimum degree at
// least ceil(n/2): start from G(n, n, p) then top up deficient vertices.
inline BipartiteGraph random_dirac_bipartite(std::size_t n, double p, Rng& rng) {
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = uniform_unit(rng) < p;
    const std::size_t need = (n + 1) / 2;
    for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < n; ++i) {
            auto deg = [&] {
                std::size_t d = 0;
                for (std::size_t j = 0; j < n; ++j) d += side ? a[j][i] : a[i][j];
                return d;
            };
            while (deg() < need) {
                const std::size_t j = uniform_below(rng, n);
                (side ? a[j][i] : a[i][j]) = true;
            }
        }
    BipartiteGraph g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j]) g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    return g;
}

// Random collection on n vertices with m colours at edge density p.
inline GraphCollection random_collection(std::size_t n, std::size_t m, double p, Rng& rng) {
    std::vector<std::shared_ptr<const Graph>> graphs;
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (uniform_unit(rng) < p) edges.push_back({u, v});
        graphs.push_back(std::make_shared<const Graph>(n, edges));
    }
    return GraphCollection(n, std::move(graphs));
}

}  // namespace hampat::oracle_ref
