#include "hampat/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hampat {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), rows_(n, VertexSet(n)) {
    std::vector<std::size_t> deg(n, 0);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") out of range for n=" + std::to_string(n));
        if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        if (rows_[e.u].test(e.v))
            throw std::invalid_argument("repeated edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        rows_[e.u].set(e.v);
        rows_[e.v].set(e.u);
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    neighbours_.resize(offsets_[n]);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t pos = offsets_[v];
        const VertexSet& r = rows_[v];
        for (std::size_t w = r.first(); w != VertexSet::npos; w = r.next(w + 1)) neighbours_[pos++] = static_cast<Vertex>(w);
    }
}

Graph Graph::complete(std::size_t n) {
    std::vector<Edge> e;
    e.reserve(n * (n - (n ? 1 : 0)) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) e.push_back({u, static_cast<Vertex>((u + 1) % n)});
    return Graph(n, e);
}

Graph Graph::path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
    return Graph(n, e);
}

Graph Graph::empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

std::size_t Graph::min_degree() const noexcept {
    std::size_t best = n_ == 0 ? 0 : static_cast<std::size_t>(-1);
    for (std::size_t v = 0; v < n_; ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbours(u))
            if (u < v) out.push_back({u, v});
    return out;
}

bool Graph::representations_agree() const {
    for (Vertex u = 0; u < n_; ++u) {
        if (rows_[u].count() != degree(u) || rows_[u].test(u)) return false;
        auto nb = neighbours(u);
        if (!std::is_sorted(nb.begin(), nb.end())) return false;
        for (Vertex v : nb)
            if (!rows_[u].test(v) || !rows_[v].test(u)) return false;
    }
    return true;
}

GraphCollection::GraphCollection(std::size_t n, std::vector<std::shared_ptr<const Graph>> graphs)
    : n_(n), graphs_(std::move(graphs)) {
    for (std::size_t c = 0; c < graphs_.size(); ++c) {
        if (!graphs_[c]) throw std::invalid_argument("null graph at colour " + std::to_string(c));
        if (graphs_[c]->order() != n)
            throw std::invalid_argument("graph at colour " + std::to_string(c) + " has " +
                                        std::to_string(graphs_[c]->order()) + " vertices, expected " +
                                        std::to_string(n));
    }
}

std::vector<Colour> GraphCollection::distinct_colours() const {
    std::vector<Colour> out;
    std::unordered_map<const Graph*, Colour> seen;
    for (Colour c = 0; c < graphs_.size(); ++c)
        if (seen.emplace(graphs_[c].get(), c).second) out.push_back(c);
    return out;
}

bool operator==(const GraphCollection& a, const GraphCollection& b) {
    if (a.n_ != b.n_ || a.graphs_.size() != b.graphs_.size()) return false;
    for (std::size_t c = 0; c < a.graphs_.size(); ++c)
        if (a.graphs_[c] != b.graphs_[c] && !(*a.graphs_[c] == *b.graphs_[c])) return false;
    return true;
}

}  // namespace hampat
