#pragma once

// Embedding primitives: reservoir sampling, cherry connections, greedy
// exactly-coloured embedding of low-degeneracy patterns, and random balanced
// partitions. Probabilistic existence arguments become sample-then-verify
// loops; greedy choices always take the smallest valid host vertex.

#include <cstdint>
#include <optional>
#include <vector>

#include "hampat/bitset.hpp"
#include "hampat/errors.hpp"
#include "hampat/graph.hpp"

namespace hampat {

struct ColouredEdge {
    Vertex u = 0;
    Vertex v = 0;
    Colour colour = 0;

    friend bool operator==(const ColouredEdge&, const ColouredEdge&) = default;
};

// Small edge-coloured pattern graph J on vertices [0, order).
struct PatternGraph {
    std::size_t order = 0;
    std::vector<ColouredEdge> edges;
};

struct EmbeddingRequest {
    PatternGraph pattern;
    // Independent set I of the pattern and its host images f(I), pairwise.
    std::vector<Vertex> anchored;
    std::vector<Vertex> anchors;
    // Host vertices the non-anchored pattern vertices must avoid (U).
    VertexSet forbidden;
    // Host vertices the non-anchored pattern vertices must land in (Z).
    VertexSet target;
    // Ordering of all pattern vertices with `anchored` as initial segment.
    std::vector<Vertex> order;
    // Bound on earlier neighbours per vertex in `order`.
    std::size_t k = 2;
};

class EmbeddingStuck : public StageFailure {
  public:
    EmbeddingStuck(Vertex pattern_vertex, std::size_t position)
        : StageFailure("embed", "no candidate for pattern vertex " + std::to_string(pattern_vertex) +
                                    " at order position " + std::to_string(position)),
          pattern_vertex_(pattern_vertex) {}

    [[nodiscard]] Vertex pattern_vertex() const noexcept { return pattern_vertex_; }

  private:
    Vertex pattern_vertex_;
};

// Injective map pattern vertex -> host vertex extending the anchors, with
// every pattern edge uv of colour c realised as an edge of G_c and all
// non-anchored images in target \ forbidden. Throws std::invalid_argument on
// a malformed request, EmbeddingStuck when some vertex has no candidate.
[[nodiscard]] std::vector<Vertex> greedy_pattern_embed(const GraphCollection& g, const EmbeddingRequest& req);

// Whether the request meets the sufficient conditions under which greedy
// embedding cannot get stuck: every host vertex has at least
// ((k-1)/k + margin)|Z| neighbours in Z in every colour the pattern uses, the
// pattern has at most margin|Z|/4 vertices, and |U cap Z| <= margin|Z|/4.
struct EmbeddingHypothesis {
    bool degree_ok = false;
    bool size_ok = false;
    bool forbidden_ok = false;
    double worst_degree_ratio = 0.0;  // min |N(v) cap Z| / |Z|

    [[nodiscard]] bool holds() const noexcept { return degree_ok && size_ok && forbidden_ok; }
};
[[nodiscard]] EmbeddingHypothesis check_embedding_hypothesis(const GraphCollection& g, const EmbeddingRequest& req,
                                                             double margin);

// Smallest z in reservoir \ (forbidden + {x, y}) with xz in G_first and zy in
// G_second. Throws std::invalid_argument if x == y, StageFailure("cherry") if
// no such z exists.
[[nodiscard]] Vertex cherry_connect(const GraphCollection& g, Colour first, Colour second, Vertex x, Vertex y,
                                    const VertexSet& reservoir, const VertexSet& forbidden);

struct ReservoirAudit {
    bool ok = false;
    // min over colours and vertices of deg(v, Z)/|Z| and deg(v, V\Z)/|V\Z|.
    double worst_ratio = 0.0;
};

// Every vertex keeps a (1/2 + margin) share of Z and of V \ Z as neighbours,
// in every colour.
[[nodiscard]] ReservoirAudit audit_reservoir(const GraphCollection& g, const VertexSet& reservoir, double margin);

struct ReservoirSample {
    VertexSet reservoir;
    int attempts = 0;
    ReservoirAudit audit;
};

// Uniform `size`-subset of V resampled until audit_reservoir passes.
// Throws RetriesExhausted after max_retries failed samples.
[[nodiscard]] ReservoirSample sample_reservoir(const GraphCollection& g, std::size_t size, double margin,
                                               std::uint64_t seed, int max_retries);

// floor(beta n), the reservoir size for share beta.
[[nodiscard]] std::size_t reservoir_size(std::size_t n, double beta);

struct Partition {
    std::vector<std::vector<Vertex>> parts;  // V_1..V_K, equal sizes
    std::vector<Vertex> remainder;           // V_0, fewer than K vertices
};

struct PartitionAudit {
    bool ok = false;
    // min over interfaces j, checked colours, and both sides of the
    // bipartite degree divided by the part size.
    double worst_ratio = 0.0;
    std::size_t worst_interface = 0;
};

// Audit the K-1 consecutive interfaces. `interface_colours[j]` lists the
// colours to check on interface (V_j, V_{j+1}); empty means every colour.
[[nodiscard]] PartitionAudit audit_partition(const GraphCollection& g, const Partition& p,
                                             const std::vector<std::vector<Colour>>& interface_colours, double margin);

struct PartitionSample {
    Partition partition;
    int attempts = 0;
    PartitionAudit audit;
};

// Uniformly random split of `vertices` into K parts of floor(|vertices|/K)
// plus a remainder. With a margin, resampled until audit_partition passes
// (RetriesExhausted otherwise); without one, the first sample is returned
// together with its audit.
[[nodiscard]] PartitionSample random_balanced_partition(const std::vector<Vertex>& vertices, std::size_t k,
                                                        const GraphCollection& g, std::optional<double> margin,
                                                        std::uint64_t seed, int max_retries,
                                                        const std::vector<std::vector<Colour>>& interface_colours = {});

}  // namespace hampat
