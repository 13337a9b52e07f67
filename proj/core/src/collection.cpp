#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hampat/core.hpp"

namespace hampat {

void ColourPattern::validate(std::size_t m) const {
    for (std::size_t i = 0; i < colours.size(); ++i)
        if (colours[i] >= m)
            throw std::invalid_argument("pattern position " + std::to_string(i) + " has colour " +
                                        std::to_string(colours[i]) + " but the collection has " +
                                        std::to_string(m) + " colours");
}

ColourPattern ColourPattern::identity(std::size_t n) {
    ColourPattern p;
    p.colours.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.colours[i] = static_cast<Colour>(i);
    return p;
}

ColourPattern ColourPattern::constant(std::size_t n, Colour c) { return ColourPattern{std::vector<Colour>(n, c)}; }

bool ColouredWalk::well_formed() const {
    if (vertices.empty()) return colours.empty() && !closed;
    const std::size_t expected = closed ? vertices.size() : vertices.size() - 1;
    if (colours.size() != expected) return false;
    if (closed && vertices.size() < 3) return false;
    std::unordered_set<Vertex> seen(vertices.begin(), vertices.end());
    return seen.size() == vertices.size();
}

void SolverParams::validate() const {
    auto fraction = [](double x) { return x > 0.0 && x <= 1.0; };
    if (alpha && !fraction(*alpha)) throw std::invalid_argument("alpha must lie in (0, 1]");
    if (beta && !(*beta > 0.0 && *beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
    if (alpha && beta && !(*beta < *alpha)) throw std::invalid_argument("beta must be smaller than alpha");
    if (gamma && !(*gamma > 0.0 && *gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0, 1)");
    if (epsilon && !(*epsilon > 0.0 && *epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (k_part < 3) throw std::invalid_argument("k_part must be at least 3");
    if (max_retries < 1) throw std::invalid_argument("max_retries must be at least 1");
}

std::size_t min_collection_degree(const GraphCollection& g) {
    if (g.colours() == 0 || g.order() == 0) return 0;
    std::size_t best = g.order();
    for (Colour c : g.distinct_colours()) best = std::min(best, g[c].min_degree());
    return best;
}

GraphCollection reduce_pattern_to_identity(const GraphCollection& g, const ColourPattern& chi) {
    if (chi.size() != g.order())
        throw std::invalid_argument("pattern length " + std::to_string(chi.size()) + " differs from n=" +
                                    std::to_string(g.order()));
    chi.validate(g.colours());
    std::vector<std::shared_ptr<const Graph>> out;
    out.reserve(chi.size());
    for (Colour c : chi.colours) out.push_back(g.handle(c));
    return GraphCollection(g.order(), std::move(out));
}

ColouredWalk rotate_cycle(const ColouredWalk& w, std::size_t offset) {
    ColouredWalk r;
    r.closed = w.closed;
    const std::size_t n = w.vertices.size();
    r.vertices.resize(n);
    r.colours.resize(w.colours.size());
    for (std::size_t i = 0; i < n; ++i) r.vertices[i] = w.vertices[(i + offset) % n];
    for (std::size_t i = 0; i < w.colours.size(); ++i) r.colours[i] = w.colours[(i + offset) % w.colours.size()];
    return r;
}

ColourPattern rotate_pattern(const ColourPattern& chi, std::size_t offset) {
    ColourPattern r;
    const std::size_t n = chi.size();
    r.colours.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.colours[i] = chi.colours[(i + offset) % n];
    return r;
}

ColouredWalk canonical_cycle(const ColouredWalk& w) {
    if (!w.closed || w.vertices.size() < 3) return w;
    const std::size_t n = w.vertices.size();
    const auto low = static_cast<std::size_t>(std::min_element(w.vertices.begin(), w.vertices.end()) - w.vertices.begin());
    ColouredWalk fwd = rotate_cycle(w, low);
    const Vertex next = fwd.vertices[1];
    const Vertex prev = fwd.vertices[n - 1];
    if (next <= prev) return fwd;
    // Reverse direction: vertex order v0, v_{n-1}, ..., v1; edge (v0,v_{n-1})
    // carried colour index n-1, and so on backwards.
    ColouredWalk rev;
    rev.closed = true;
    rev.vertices.resize(n);
    rev.colours.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rev.vertices[i] = fwd.vertices[(n - i) % n];
        rev.colours[i] = fwd.colours[(2 * n - 1 - i) % n];
    }
    return rev;
}

}  // namespace hampat
