#include <gtest/gtest.h>

#include "hampat/matching.hpp"
#include "hampat/random.hpp"
#include "oracles.hpp"

using namespace hampat;

namespace {

BipartiteGraph from_pairs(std::size_t l, std::size_t r, std::initializer_list<std::pair<int, int>> pairs) {
    BipartiteGraph g(l, r);
    for (auto [a, b] : pairs) g.add_edge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    return g;
}

}  // namespace

TEST(Matching, IdentityGraph) {
    const auto g = from_pairs(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    const auto r = perfect_matching(g);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.matching->left_to_right, (std::vector<std::uint32_t>{0, 1, 2, 3}));
}

TEST(Matching, HallWitness) {
    // Left 0 and 1 both only see right 0.
    const auto g = from_pairs(3, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}});
    const auto r = perfect_matching(g);
    ASSERT_FALSE(r.found());
    EXPECT_LT(neighbourhood_size(g, r.hall_witness), r.hall_witness.size());
    EXPECT_TRUE(std::is_sorted(r.hall_witness.begin(), r.hall_witness.end()));
}

TEST(Matching, UnbalancedSidesThrow) { EXPECT_THROW((void)perfect_matching(BipartiteGraph(2, 3)), std::invalid_argument); }

TEST(Matching, EmptyGraph) {
    const auto r = perfect_matching(BipartiteGraph(0, 0));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.matching->size, 0u);
}

TEST(Matching, MaximumAgreesWithEnumeration) {
    Rng rng(17);
    for (int rep = 0; rep < 400; ++rep) {
        const std::size_t l = 1 + uniform_below(rng, 8);
        const std::size_t r = 1 + uniform_below(rng, 8);
        BipartiteGraph g(l, r);
        const double p = uniform_unit(rng);
        for (std::uint32_t a = 0; a < l; ++a)
            for (std::uint32_t b = 0; b < r; ++b)
                if (uniform_unit(rng) < p) g.add_edge(a, b);
        const Matching m = maximum_bipartite_matching(g);
        EXPECT_TRUE(m.valid_for(g));
        EXPECT_EQ(m.size, oracle_ref::brute_max_matching(g));
    }
}

TEST(Matching, FailureWitnessAlwaysViolatesHall) {
    Rng rng(23);
    int failures = 0;
    for (int rep = 0; rep < 500; ++rep) {
        const std::size_t n = 2 + uniform_below(rng, 9);
        BipartiteGraph g(n, n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                if (uniform_unit(rng) < 0.25) g.add_edge(a, b);
        const auto r = perfect_matching(g);
        if (r.found()) {
            EXPECT_TRUE(r.matching->valid_for(g));
            EXPECT_EQ(r.matching->size, n);
        } else {
            ++failures;
            ASSERT_FALSE(r.hall_witness.empty());
            EXPECT_LT(neighbourhood_size(g, r.hall_witness), r.hall_witness.size());
        }
    }
    EXPECT_GT(failures, 0);
}

TEST(Matching, DiracBipartiteAlwaysPerfect) {
    Rng rng(31);
    for (std::size_t n = 4; n <= 12; ++n)
        for (int rep = 0; rep < 100; ++rep) {
            const auto g = oracle_ref::random_dirac_bipartite(n, 0.3, rng);
            ASSERT_GE(g.min_degree(), (n + 1) / 2);
            const auto r = perfect_matching(g);
            ASSERT_TRUE(r.found());
            EXPECT_TRUE(r.matching->valid_for(g));
        }
}

TEST(Matching, Deterministic) {
    Rng rng(2);
    const auto g = oracle_ref::random_dirac_bipartite(30, 0.5, rng);
    EXPECT_EQ(maximum_bipartite_matching(g).left_to_right, maximum_bipartite_matching(g).left_to_right);
}

TEST(Matching, ValidForRejectsForeignPairs) {
    const auto g = from_pairs(2, 2, {{0, 0}, {1, 1}});
    Matching m;
    m.left_to_right = {1, 0};
    m.right_to_left = {1, 0};
    m.size = 2;
    EXPECT_FALSE(m.valid_for(g));
}
