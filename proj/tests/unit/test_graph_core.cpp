#include <gtest/gtest.h>

#include "hampat/core.hpp"
#include "hampat/graph.hpp"
#include "hampat/instances.hpp"
#include "hampat/random.hpp"
#include "oracles.hpp"

using namespace hampat;

namespace {

GraphCollection shared(const Graph& g, std::size_t m) { return gen_identical(g, m); }

ColouredWalk closed_walk(std::vector<Vertex> vs, std::vector<Colour> cs) { return {std::move(vs), std::move(cs), true}; }

}  // namespace

TEST(Graph, RejectsLoopsAndDuplicates) {
    const std::vector<Edge> loop{{1, 1}};
    EXPECT_THROW(Graph(3, loop), std::invalid_argument);
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    EXPECT_THROW(Graph(3, dup), std::invalid_argument);
    const std::vector<Edge> far{{0, 3}};
    EXPECT_THROW(Graph(3, far), std::invalid_argument);
}

TEST(Graph, RepresentationsAgree) {
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const auto g = oracle_ref::random_collection(70, 1, 0.4, rng);
        const Graph& h = g[0];
        EXPECT_TRUE(h.representations_agree());
        for (Vertex v = 0; v < 70; ++v) {
            EXPECT_EQ(h.row(v).count(), h.degree(v));
            for (Vertex u : h.neighbours(v)) EXPECT_TRUE(h.has_edge(u, v));
        }
    }
}

TEST(Graph, Builders) {
    EXPECT_EQ(Graph::complete(5).edge_count(), 10u);
    EXPECT_EQ(Graph::cycle(6).min_degree(), 2u);
    EXPECT_EQ(Graph::path(4).edge_count(), 3u);
    EXPECT_EQ(Graph::empty(4).edge_count(), 0u);
}

TEST(Collection, SharedHandlesAndDistinctColours) {
    const auto g = shared(Graph::complete(4), 5);
    EXPECT_EQ(g.colours(), 5u);
    EXPECT_EQ(g.distinct_colours(), std::vector<Colour>{0});
    EXPECT_EQ(g.handle(0).get(), g.handle(4).get());
}

TEST(Verify, AcceptsK4IdentityCycle) {
    const auto g = shared(Graph::complete(4), 4);
    EXPECT_TRUE(verify_pattern_cycle(g, ColourPattern::identity(4), closed_walk({0, 1, 2, 3}, {0, 1, 2, 3})));
}

TEST(Verify, ReportsEachFailureKind) {
    const auto g = shared(Graph::cycle(5), 5);
    const auto chi = ColourPattern::identity(5);
    EXPECT_EQ(verify_pattern_cycle(g, chi, closed_walk({0, 1, 2, 3, 4}, {0, 1, 2, 3, 4})).reason, WalkCheck::ok);
    EXPECT_EQ(verify_pattern_cycle(g, chi, closed_walk({0, 1, 2, 3}, {0, 1, 2, 3})).reason, WalkCheck::not_spanning);
    EXPECT_EQ(verify_pattern_cycle(g, chi, closed_walk({0, 1, 2, 3, 3}, {0, 1, 2, 3, 4})).reason,
              WalkCheck::repeat_vertex);
    EXPECT_EQ(verify_pattern_cycle(g, chi, closed_walk({0, 1, 2, 3, 4}, {0, 1, 2, 4, 3})).reason,
              WalkCheck::colour_mismatch);
    const auto missing = verify_pattern_cycle(g, chi, closed_walk({0, 2, 1, 3, 4}, {0, 1, 2, 3, 4}));
    EXPECT_EQ(missing.reason, WalkCheck::missing_edge);
    EXPECT_EQ(missing.position, 0u);
    ColouredWalk open{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, false};
    EXPECT_EQ(verify_pattern_cycle(g, chi, open).reason, WalkCheck::not_closed);
}

TEST(Verify, ColoursMustFollowPatternNotJustGraphs) {
    // Two copies of the same graph under different colours: a cycle that
    // uses the right edges but labels them with the wrong colour fails.
    const auto g = shared(Graph::complete(4), 2);
    const ColourPattern chi{{0, 1, 0, 1}};
    EXPECT_TRUE(verify_pattern_cycle(g, chi, closed_walk({0, 1, 2, 3}, {0, 1, 0, 1})));
    EXPECT_FALSE(verify_pattern_cycle(g, chi, closed_walk({0, 1, 2, 3}, {1, 0, 1, 0})));
}

TEST(Verify, CounterexamplePatternNeedsMatchingEdges) {
    const Instance cx = gen_counterexample(6);
    // Edge 3-4 stays inside one half but needs colour 1 (bipartite).
    EXPECT_FALSE(verify_pattern_cycle(cx.graphs, *cx.pattern, closed_walk({0, 1, 2, 3, 4, 5}, cx.pattern->colours)));
}

TEST(Reduce, IdentityAndAlternation) {
    Rng rng(1);
    const auto g = oracle_ref::random_collection(6, 2, 0.5, rng);
    const auto chi = ColourPattern::identity(6);
    const auto g6 = oracle_ref::random_collection(6, 6, 0.5, rng);
    const auto same = reduce_pattern_to_identity(g6, chi);
    for (Colour c = 0; c < 6; ++c) EXPECT_EQ(same.handle(c).get(), g6.handle(c).get());
    const ColourPattern alt{{0, 1, 0, 1}};
    const auto g4 = oracle_ref::random_collection(4, 2, 0.5, rng);
    const auto h = reduce_pattern_to_identity(g4, alt);
    ASSERT_EQ(h.colours(), 4u);
    EXPECT_EQ(h.handle(0).get(), g4.handle(0).get());
    EXPECT_EQ(h.handle(1).get(), g4.handle(1).get());
    EXPECT_EQ(h.handle(2).get(), g4.handle(0).get());
    EXPECT_EQ(h.handle(3).get(), g4.handle(1).get());
    (void)g;
}

TEST(Reduce, VerificationIsInvariant) {
    Rng rng(9);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 5 + uniform_below(rng, 4);
        const std::size_t m = 1 + uniform_below(rng, 3);
        const auto g = oracle_ref::random_collection(n, m, 0.7, rng);
        const auto chi = gen_pattern(PatternKind::random, n, m, rng());
        std::vector<Vertex> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        shuffle(vs, rng);
        const auto w = closed_walk(vs, chi.colours);
        const auto h = reduce_pattern_to_identity(g, chi);
        ColouredWalk wi = w;
        for (std::size_t i = 0; i < n; ++i) wi.colours[i] = static_cast<Colour>(i);
        EXPECT_EQ(verify_pattern_cycle(g, chi, w).ok(), verify_pattern_cycle(h, ColourPattern::identity(n), wi).ok());
    }
}

TEST(Verify, RotationInvariance) {
    Rng rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 6;
        const auto g = oracle_ref::random_collection(n, 2, 0.8, rng);
        const auto chi = gen_pattern(PatternKind::random, n, 2, rng());
        std::vector<Vertex> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        shuffle(vs, rng);
        const auto w = closed_walk(vs, chi.colours);
        const std::size_t r = uniform_below(rng, n);
        EXPECT_EQ(verify_pattern_cycle(g, chi, w).ok(),
                  verify_pattern_cycle(g, rotate_pattern(chi, r), rotate_cycle(w, r)).ok());
    }
}

TEST(Canonical, SmallestFirstThenSmallerNeighbour) {
    const auto c = canonical_cycle(closed_walk({3, 1, 0, 2}, {0, 1, 2, 3}));
    EXPECT_EQ(c.vertices, (std::vector<Vertex>{0, 1, 3, 2}));
    // Colours follow their edges: 0-1 had colour 1, 1-3 colour 0.
    EXPECT_EQ(c.colours[0], 1u);
    EXPECT_EQ(c.colours[1], 0u);
}

TEST(Params, Validation) {
    SolverParams p;
    EXPECT_NO_THROW(p.validate());
    p.k_part = 1;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p.k_part = 8;
    p.epsilon = 1.5;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Pattern, ValidateRange) {
    EXPECT_THROW(ColourPattern({{0, 1, 2}}).validate(2), std::invalid_argument);
    EXPECT_NO_THROW(ColourPattern::constant(4, 1).validate(2));
}

TEST(MinDegree, CounterexampleIsExactlyHalf) {
    for (std::size_t n = 6; n <= 20; n += 2) EXPECT_EQ(min_collection_degree(gen_counterexample(n).graphs), n / 2);
}
