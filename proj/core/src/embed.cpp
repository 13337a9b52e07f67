#include "hampat/embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hampat/random.hpp"

namespace hampat {

namespace {

struct Back {
    Vertex earlier;
    Colour colour;
};

// Per pattern vertex, the earlier neighbours under `order` with edge colours.
// Validates the request along the way.
std::vector<std::vector<Back>> earlier_neighbours(const GraphCollection& g, const EmbeddingRequest& req) {
    const auto& pat = req.pattern;
    const std::size_t h = pat.order;
    if (req.order.size() != h) throw std::invalid_argument("embedding order must list every pattern vertex once");
    if (req.anchored.size() != req.anchors.size()) throw std::invalid_argument("anchored and anchors differ in length");
    std::vector<std::size_t> position(h, h);
    for (std::size_t i = 0; i < h; ++i) {
        if (req.order[i] >= h || position[req.order[i]] != h)
            throw std::invalid_argument("embedding order is not a permutation of the pattern vertices");
        position[req.order[i]] = i;
    }
    for (std::size_t i = 0; i < req.anchored.size(); ++i)
        if (req.anchored[i] >= h || position[req.anchored[i]] >= req.anchored.size())
            throw std::invalid_argument("anchored vertices must form the initial segment of the order");
    const std::size_t n = g.order();
    if (req.forbidden.universe() != n || req.target.universe() != n)
        throw std::invalid_argument("forbidden/target sets must be over the host vertex set");
    VertexSet anchor_set(n);
    for (Vertex a : req.anchors) {
        if (a >= n) throw std::invalid_argument("anchor outside the host vertex set");
        if (anchor_set.test(a)) throw std::invalid_argument("anchor map is not injective");
        anchor_set.set(a);
    }

    std::vector<std::vector<Back>> back(h);
    for (const auto& e : pat.edges) {
        if (e.u >= h || e.v >= h || e.u == e.v) throw std::invalid_argument("malformed pattern edge");
        if (e.colour >= g.colours()) throw std::invalid_argument("pattern colour outside the collection");
        const bool u_anchor = position[e.u] < req.anchored.size();
        const bool v_anchor = position[e.v] < req.anchored.size();
        if (u_anchor && v_anchor) throw std::invalid_argument("anchored set is not independent in the pattern");
        if (position[e.u] < position[e.v])
            back[e.v].push_back({e.u, e.colour});
        else
            back[e.u].push_back({e.v, e.colour});
    }
    for (Vertex v = 0; v < h; ++v)
        if (back[v].size() > req.k)
            throw std::invalid_argument("pattern vertex " + std::to_string(v) + " has " +
                                        std::to_string(back[v].size()) + " earlier neighbours, more than k=" +
                                        std::to_string(req.k));
    return back;
}

}  // namespace

std::vector<Vertex> greedy_pattern_embed(const GraphCollection& g, const EmbeddingRequest& req) {
    const auto back = earlier_neighbours(g, req);
    const std::size_t n = g.order();
    constexpr Vertex unset = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> image(req.pattern.order, unset);

    VertexSet blocked = req.forbidden;
    for (std::size_t i = 0; i < req.anchored.size(); ++i) {
        image[req.anchored[i]] = req.anchors[i];
        blocked.set(req.anchors[i]);
    }
    VertexSet candidates(n);
    for (std::size_t pos = req.anchored.size(); pos < req.order.size(); ++pos) {
        const Vertex v = req.order[pos];
        candidates = req.target;
        for (const Back& b : back[v]) candidates &= g[b.colour].row(image[b.earlier]);
        const std::size_t pick = candidates.first_and_not(candidates, blocked);
        if (pick == VertexSet::npos) throw EmbeddingStuck(v, pos);
        image[v] = static_cast<Vertex>(pick);
        blocked.set(pick);
    }
    return image;
}

EmbeddingHypothesis check_embedding_hypothesis(const GraphCollection& g, const EmbeddingRequest& req, double margin) {
    EmbeddingHypothesis h;
    const double z = static_cast<double>(req.target.count());
    if (z == 0) return h;
    std::vector<Colour> used;
    for (const auto& e : req.pattern.edges) used.push_back(e.colour);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    double worst = 1.0;
    for (Colour c : used)
        for (Vertex v = 0; v < g.order(); ++v)
            worst = std::min(worst, static_cast<double>(g[c].row(v).count_and(req.target)) / z);
    const double k = static_cast<double>(req.k);
    h.worst_degree_ratio = worst;
    h.degree_ok = worst >= (k - 1.0) / k + margin;
    h.size_ok = static_cast<double>(req.pattern.order) <= margin * z / 4.0;
    h.forbidden_ok = static_cast<double>(req.forbidden.count_and(req.target)) <= margin * z / 4.0;
    return h;
}

Vertex cherry_connect(const GraphCollection& g, Colour first, Colour second, Vertex x, Vertex y,
                      const VertexSet& reservoir, const VertexSet& forbidden) {
    if (x == y) throw std::invalid_argument("cherry_connect: endpoints must be distinct");
    if (first >= g.colours() || second >= g.colours()) throw std::invalid_argument("cherry_connect: colour out of range");
    VertexSet candidates = g[first].row(x) & g[second].row(y);
    candidates &= reservoir;
    candidates.reset(x);
    candidates.reset(y);
    const std::size_t z = candidates.first_and_not(candidates, forbidden);
    if (z == VertexSet::npos)
        throw StageFailure("cherry", "no middle vertex for " + std::to_string(x) + " -> " + std::to_string(y) +
                                         " in colours " + std::to_string(first) + "," + std::to_string(second));
    return static_cast<Vertex>(z);
}

ReservoirAudit audit_reservoir(const GraphCollection& g, const VertexSet& reservoir, double margin) {
    const std::size_t n = g.order();
    const std::size_t inside = reservoir.count();
    const std::size_t outside = n - inside;
    double worst = 1.0;
    for (Colour c : g.distinct_colours()) {
        const Graph& graph = g[c];
        for (Vertex v = 0; v < n; ++v) {
            const std::size_t into = graph.row(v).count_and(reservoir);
            if (inside) worst = std::min(worst, static_cast<double>(into) / static_cast<double>(inside));
            if (outside)
                worst = std::min(worst, static_cast<double>(graph.degree(v) - into) / static_cast<double>(outside));
        }
    }
    return {worst >= 0.5 + margin, worst};
}

std::size_t reservoir_size(std::size_t n, double beta) {
    return static_cast<std::size_t>(std::floor(beta * static_cast<double>(n) + 1e-9));
}

ReservoirSample sample_reservoir(const GraphCollection& g, std::size_t size, double margin, std::uint64_t seed,
                                 int max_retries) {
    const std::size_t n = g.order();
    if (size > n) throw std::invalid_argument("sample_reservoir: size exceeds n");
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    Rng rng(seed);
    double best = -1.0;
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        const auto picked = sample_without_replacement(all, size, rng);
        VertexSet z = VertexSet::from_range(n, picked);
        const ReservoirAudit audit = audit_reservoir(g, z, margin);
        if (audit.ok) return {std::move(z), attempt, audit};
        best = std::max(best, audit.worst_ratio);
    }
    throw RetriesExhausted("reservoir", max_retries, best);
}

PartitionAudit audit_partition(const GraphCollection& g, const Partition& p,
                               const std::vector<std::vector<Colour>>& interface_colours, double margin) {
    PartitionAudit audit;
    const std::size_t k = p.parts.size();
    if (k == 0 || p.parts[0].empty()) return audit;
    const std::size_t n = g.order();
    const double size = static_cast<double>(p.parts[0].size());
    const std::vector<Colour> every = g.distinct_colours();
    double worst = 1.0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        const VertexSet left = VertexSet::from_range(n, p.parts[j]);
        const VertexSet right = VertexSet::from_range(n, p.parts[j + 1]);
        const auto& colours = (j < interface_colours.size() && !interface_colours[j].empty()) ? interface_colours[j] : every;
        for (Colour c : colours) {
            const Graph& graph = g[c];
            std::size_t low = std::numeric_limits<std::size_t>::max();
            for (Vertex v : p.parts[j]) low = std::min(low, graph.row(v).count_and(right));
            for (Vertex v : p.parts[j + 1]) low = std::min(low, graph.row(v).count_and(left));
            const double ratio = static_cast<double>(low) / size;
            if (ratio < worst) {
                worst = ratio;
                audit.worst_interface = j;
            }
        }
    }
    audit.worst_ratio = worst;
    audit.ok = worst >= 0.5 + margin;
    return audit;
}

PartitionSample random_balanced_partition(const std::vector<Vertex>& vertices, std::size_t k,
                                          const GraphCollection& g, std::optional<double> margin, std::uint64_t seed,
                                          int max_retries, const std::vector<std::vector<Colour>>& interface_colours) {
    if (k == 0 || vertices.size() < k) throw std::invalid_argument("random_balanced_partition: need at least K vertices");
    const std::size_t part = vertices.size() / k;
    Rng rng(seed);
    double best = -1.0;
    const int budget = margin ? max_retries : 1;
    for (int attempt = 1; attempt <= budget; ++attempt) {
        std::vector<Vertex> order = vertices;
        shuffle(order, rng);
        Partition p;
        p.parts.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            p.parts[j].assign(order.begin() + static_cast<std::ptrdiff_t>(j * part),
                              order.begin() + static_cast<std::ptrdiff_t>((j + 1) * part));
            std::sort(p.parts[j].begin(), p.parts[j].end());
        }
        p.remainder.assign(order.begin() + static_cast<std::ptrdiff_t>(k * part), order.end());
        std::sort(p.remainder.begin(), p.remainder.end());
        const PartitionAudit audit = audit_partition(g, p, interface_colours, margin.value_or(-1.0));
        if (audit.ok) return {std::move(p), attempt, audit};
        best = std::max(best, audit.worst_ratio);
    }
    throw RetriesExhausted("partition", budget, best);
}

}  // namespace hampat
