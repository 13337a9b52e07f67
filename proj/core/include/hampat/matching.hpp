#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hampat {

// Bipartite graph between left ids [0, left) and right ids [0, right).
struct BipartiteGraph {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<std::vector<std::uint32_t>> adj;  // left -> sorted right neighbours

    BipartiteGraph() = default;
    BipartiteGraph(std::size_t l, std::size_t r) : left(l), right(r), adj(l) {}

    void add_edge(std::uint32_t l, std::uint32_t r) { adj[l].push_back(r); }
    [[nodiscard]] std::size_t min_degree() const;  // over both sides
};

struct Matching {
    static constexpr std::uint32_t unmatched = static_cast<std::uint32_t>(-1);

    std::vector<std::uint32_t> left_to_right;
    std::vector<std::uint32_t> right_to_left;
    std::size_t size = 0;

    // True when every pair is an edge of g and the two maps are consistent.
    [[nodiscard]] bool valid_for(const BipartiteGraph& g) const;
};

// Hopcroft-Karp. Free vertices and neighbours are scanned in increasing id
// order, so the result is a fixed function of the input.
[[nodiscard]] Matching maximum_bipartite_matching(const BipartiteGraph& g);

struct PerfectMatchingResult {
    std::optional<Matching> matching;
    // On failure: a left set S with |N(S)| < |S|, sorted.
    std::vector<std::uint32_t> hall_witness;

    [[nodiscard]] bool found() const noexcept { return matching.has_value(); }
};

// Throws std::invalid_argument when the sides differ in size.
[[nodiscard]] PerfectMatchingResult perfect_matching(const BipartiteGraph& g);

// |N(S)| for a left set S.
[[nodiscard]] std::size_t neighbourhood_size(const BipartiteGraph& g, const std::vector<std::uint32_t>& left_set);

}  // namespace hampat
