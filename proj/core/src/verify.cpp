#include <algorithm>

#include "hampat/core.hpp"

namespace hampat {

std::string_view to_string(WalkCheck r) noexcept {
    switch (r) {
        case WalkCheck::ok: return "ok";
        case WalkCheck::not_closed: return "not-closed";
        case WalkCheck::not_spanning: return "not-spanning";
        case WalkCheck::repeat_vertex: return "repeat-vertex";
        case WalkCheck::colour_mismatch: return "colour-mismatch";
        case WalkCheck::missing_edge: return "missing-edge";
    }
    return "unknown";
}

namespace {

// First repeated or out-of-range vertex index, or npos.
std::size_t first_repeat(const std::vector<Vertex>& vertices, std::size_t n, bool& out_of_range) {
    VertexSet seen(n);
    out_of_range = false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= n) {
            out_of_range = true;
            return i;
        }
        if (seen.test(vertices[i])) return i;
        seen.set(vertices[i]);
    }
    return VertexSet::npos;
}

}  // namespace

WalkVerdict verify_pattern_cycle(const GraphCollection& g, const ColourPattern& chi, const ColouredWalk& w) {
    const std::size_t n = g.order();
    if (!w.closed) return {WalkCheck::not_closed, 0};
    bool out_of_range = false;
    if (auto pos = first_repeat(w.vertices, n, out_of_range); pos != VertexSet::npos)
        return {out_of_range ? WalkCheck::not_spanning : WalkCheck::repeat_vertex, pos};
    if (w.vertices.size() != n) return {WalkCheck::not_spanning, w.vertices.size()};
    if (w.colours.size() != n || chi.size() != n) return {WalkCheck::colour_mismatch, std::min(w.colours.size(), chi.size())};
    for (std::size_t i = 0; i < n; ++i)
        if (w.colours[i] != chi[i]) return {WalkCheck::colour_mismatch, i};
    for (std::size_t i = 0; i < n; ++i) {
        const Edge e = w.edge(i);
        if (chi[i] >= g.colours() || !g.has_edge(chi[i], e.u, e.v)) return {WalkCheck::missing_edge, i};
    }
    return {};
}

WalkVerdict verify_coloured_path(const GraphCollection& g, const ColouredWalk& w) {
    if (w.closed) return {WalkCheck::not_closed, 0};
    bool out_of_range = false;
    if (auto pos = first_repeat(w.vertices, g.order(), out_of_range); pos != VertexSet::npos)
        return {out_of_range ? WalkCheck::not_spanning : WalkCheck::repeat_vertex, pos};
    if (w.vertices.empty() || w.colours.size() + 1 != w.vertices.size())
        return {WalkCheck::colour_mismatch, w.colours.size()};
    for (std::size_t i = 0; i < w.colours.size(); ++i) {
        const Edge e = w.edge(i);
        if (w.colours[i] >= g.colours() || !g.has_edge(w.colours[i], e.u, e.v)) return {WalkCheck::missing_edge, i};
    }
    return {};
}

}  // namespace hampat
