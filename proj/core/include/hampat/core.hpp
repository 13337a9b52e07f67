#pragma once

// Data model shared by every stage: colour patterns, coloured walks (the
// witness type for paths and cycles), solver parameters, and the checks that
// certify a witness against a graph collection.
//
// Vertices and colours are 0-based throughout. A pattern position i here is
// position i+1 in the one-based [n] convention.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hampat/graph.hpp"

namespace hampat {

struct ColourPattern {
    std::vector<Colour> colours;

    [[nodiscard]] std::size_t size() const noexcept { return colours.size(); }
    [[nodiscard]] Colour operator[](std::size_t i) const noexcept { return colours[i]; }

    // Throws std::invalid_argument if any entry is >= m.
    void validate(std::size_t m) const;

    static ColourPattern identity(std::size_t n);
    static ColourPattern constant(std::size_t n, Colour c);
    friend bool operator==(const ColourPattern&, const ColourPattern&) = default;
};

struct ColouredWalk {
    std::vector<Vertex> vertices;
    std::vector<Colour> colours;
    bool closed = false;

    [[nodiscard]] std::size_t edge_count() const noexcept { return colours.size(); }
    [[nodiscard]] Vertex front() const { return vertices.front(); }
    [[nodiscard]] Vertex back() const { return vertices.back(); }

    // Edge i as (vertices[i], vertices[i+1]), wrapping for closed walks.
    [[nodiscard]] Edge edge(std::size_t i) const {
        return {vertices[i], vertices[(i + 1) % vertices.size()]};
    }

    // Length relation between vertices and colours plus vertex distinctness.
    [[nodiscard]] bool well_formed() const;

    friend bool operator==(const ColouredWalk&, const ColouredWalk&) = default;
};

enum class WalkCheck : std::uint8_t {
    ok,
    not_closed,
    not_spanning,
    repeat_vertex,
    colour_mismatch,
    missing_edge,
};

[[nodiscard]] std::string_view to_string(WalkCheck r) noexcept;

struct WalkVerdict {
    WalkCheck reason = WalkCheck::ok;
    // Offending position (edge index or vertex index) when reason != ok.
    std::size_t position = 0;

    [[nodiscard]] bool ok() const noexcept { return reason == WalkCheck::ok; }
    explicit operator bool() const noexcept { return ok(); }
};

struct SolverParams {
    // Degree margin; when unset it is read off the instance as
    // min_degree/n - 1/2.
    std::optional<double> alpha;
    // Absorbed reservoir share: round(beta * n) vertices, at least one.
    std::optional<double> beta;
    // Reservoir share covered by connections; unset means "smallest value
    // the connection plan needs".
    std::optional<double> gamma;
    std::optional<double> epsilon;
    std::size_t k_part = 8;
    int max_retries = 20;
    std::uint64_t seed = 0;

    // Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

// min over colours and vertices of the vertex degree; 0 for empty collections.
[[nodiscard]] std::size_t min_collection_degree(const GraphCollection& g);

// A Hamilton cycle whose edge i lies in graph chi[i]. The walk's first edge
// is pattern position 0; rotations are not searched.
[[nodiscard]] WalkVerdict verify_pattern_cycle(const GraphCollection& g, const ColourPattern& chi,
                                               const ColouredWalk& w);

// Open walk, distinct vertices, edge i in graph w.colours[i].
[[nodiscard]] WalkVerdict verify_coloured_path(const GraphCollection& g, const ColouredWalk& w);

// (H_0, ..., H_{n-1}) with H_i = G_{chi[i]}; adjacency is shared, not copied.
[[nodiscard]] GraphCollection reduce_pattern_to_identity(const GraphCollection& g, const ColourPattern& chi);

// Rotate/reflect a closed walk so the smallest vertex comes first and the
// second vertex is the smaller of its two cycle neighbours. Colours follow
// their edges. Used for comparing and deduplicating cycles only.
[[nodiscard]] ColouredWalk canonical_cycle(const ColouredWalk& w);

// Rotate a closed walk so that it starts at vertex index `offset`.
[[nodiscard]] ColouredWalk rotate_cycle(const ColouredWalk& w, std::size_t offset);

[[nodiscard]] ColourPattern rotate_pattern(const ColourPattern& chi, std::size_t offset);

}  // namespace hampat
