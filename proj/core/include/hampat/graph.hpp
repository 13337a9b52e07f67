#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hampat/bitset.hpp"

namespace hampat {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    // u < v form; the canonical representation used in files and comparisons.
    [[nodiscard]] Edge normalized() const noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on {0, ..., n-1}.
//
// Adjacency is held twice: one bitset row per vertex for O(1) membership and
// set algebra, and a CSR array of sorted neighbour lists for iteration. Both
// are built from the same edge list and never mutated afterwards.
class Graph {
  public:
    Graph() = default;

    // Throws std::invalid_argument on loops, out-of-range endpoints or
    // repeated edges (in either orientation).
    Graph(std::size_t n, std::span<const Edge> edges);

    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph path(std::size_t n);
    static Graph empty(std::size_t n);

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return neighbours_.size() / 2; }

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept { return u < n_ && v < n_ && rows_[u].test(v); }
    [[nodiscard]] const VertexSet& row(Vertex v) const noexcept { return rows_[v]; }
    [[nodiscard]] std::span<const Vertex> neighbours(Vertex v) const noexcept {
        return {neighbours_.data() + offsets_[v], neighbours_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] std::size_t min_degree() const noexcept;

    // Sorted list with u < v.
    [[nodiscard]] std::vector<Edge> edges() const;

    // True when the bitset rows and neighbour lists describe the same
    // symmetric, loop-free relation.
    [[nodiscard]] bool representations_agree() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.neighbours_ == b.neighbours_ && a.offsets_ == b.offsets_; }

  private:
    std::size_t n_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbours_;
};

// Ordered family (G_0, ..., G_{m-1}) of graphs on a common vertex set; colour
// c refers to graph c. Members are shared handles, so replicating a graph
// under several colours costs no adjacency storage.
class GraphCollection {
  public:
    GraphCollection() = default;
    GraphCollection(std::size_t n, std::vector<std::shared_ptr<const Graph>> graphs);

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] std::size_t colours() const noexcept { return graphs_.size(); }

    [[nodiscard]] const Graph& graph(Colour c) const { return *graphs_.at(c); }
    [[nodiscard]] const Graph& operator[](Colour c) const noexcept { return *graphs_[c]; }
    [[nodiscard]] const std::shared_ptr<const Graph>& handle(Colour c) const { return graphs_.at(c); }
    [[nodiscard]] bool has_edge(Colour c, Vertex u, Vertex v) const noexcept { return graphs_[c]->has_edge(u, v); }

    // One representative colour per distinct underlying graph, in first
    // occurrence order. Degree audits only need to visit these.
    [[nodiscard]] std::vector<Colour> distinct_colours() const;

    friend bool operator==(const GraphCollection& a, const GraphCollection& b);

  private:
    std::size_t n_ = 0;
    std::vector<std::shared_ptr<const Graph>> graphs_;
};

}  // namespace hampat
