#include <gtest/gtest.h>

#include "hampat/instances.hpp"
#include "hampat/oracle.hpp"
#include "hampat/random.hpp"
#include "oracles.hpp"

using namespace hampat;

TEST(Oracle, CounterexampleHasNoSolution) {
    for (std::size_t n : {6u, 8u, 10u}) {
        const Instance cx = gen_counterexample(n);
        EXPECT_EQ(exact_solve(cx.graphs, *cx.pattern).status, OracleStatus::no_solution);
        EXPECT_FALSE(oracle_ref::has_pattern_cycle(cx.graphs, *cx.pattern));
        const auto all_bip = ColourPattern::constant(n, 1);
        const auto r = exact_solve(cx.graphs, all_bip);
        ASSERT_EQ(r.status, OracleStatus::found);
        EXPECT_TRUE(verify_pattern_cycle(cx.graphs, all_bip, *r.cycle));
    }
}

TEST(Oracle, IdenticalK5AnyPattern) {
    const auto g = gen_identical(Graph::complete(5), 3);
    Rng rng(1);
    for (int rep = 0; rep < 20; ++rep) {
        const auto chi = gen_pattern(PatternKind::random, 5, 3, rng());
        const auto r = exact_solve(g, chi);
        ASSERT_EQ(r.status, OracleStatus::found);
        EXPECT_TRUE(verify_pattern_cycle(g, chi, *r.cycle));
    }
}

TEST(Oracle, AgreesWithSubsetDp) {
    Rng rng(77);
    int found = 0, absent = 0;
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 4 + uniform_below(rng, 6);
        const std::size_t m = 1 + uniform_below(rng, 3);
        const auto g = oracle_ref::random_collection(n, m, 0.3 + 0.5 * uniform_unit(rng), rng);
        const auto chi = gen_pattern(PatternKind::random, n, m, rng());
        if (n < 3) continue;
        const auto r = exact_solve(g, chi);
        ASSERT_NE(r.status, OracleStatus::budget_exhausted);
        EXPECT_EQ(r.status == OracleStatus::found, oracle_ref::has_pattern_cycle(g, chi));
        if (r.cycle) {
            EXPECT_TRUE(verify_pattern_cycle(g, chi, *r.cycle));
            ++found;
        } else {
            ++absent;
        }
    }
    EXPECT_GT(found, 0);
    EXPECT_GT(absent, 0);
}

TEST(Oracle, BudgetExhaustedIsDistinct) {
    const Instance cx = gen_counterexample(12);
    const auto r = exact_solve(cx.graphs, *cx.pattern, {10, false});
    EXPECT_EQ(r.status, OracleStatus::budget_exhausted);
    EXPECT_FALSE(r.cycle);
    EXPECT_EQ(count_solutions(cx.graphs, ColourPattern::constant(12, 1), 10).status, OracleStatus::budget_exhausted);
}

TEST(Oracle, BadSizes) {
    const auto g = gen_identical(Graph::complete(5), 1);
    EXPECT_THROW((void)exact_solve(g, ColourPattern::constant(4, 0)), std::invalid_argument);
    const auto tiny = gen_identical(Graph::complete(2), 1);
    EXPECT_THROW((void)exact_solve(tiny, ColourPattern::constant(2, 0)), std::invalid_argument);
}

TEST(Oracle, AnyRotationFindsRotatedPattern) {
    // Colour 0 is a single edge 0-1, colour 1 the rest of C_6: the anchored
    // pattern (1,1,0,1,1,1) is satisfiable, and so is every rotation.
    std::vector<Edge> e0{{0, 1}};
    std::vector<Edge> e1{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
    const GraphCollection g(6, {std::make_shared<const Graph>(6, e0), std::make_shared<const Graph>(6, e1)});
    const ColourPattern chi{{1, 1, 0, 1, 1, 1}};
    const auto strict = exact_solve(g, chi);
    ASSERT_EQ(strict.status, OracleStatus::found);
    EXPECT_TRUE(verify_pattern_cycle(g, chi, *strict.cycle));
    const auto rot = exact_solve(g, chi, {1'000'000, true});
    ASSERT_EQ(rot.status, OracleStatus::found);
    EXPECT_EQ(rot.cycle->front(), 0u);
    EXPECT_TRUE(verify_pattern_cycle(g, rotate_pattern(chi, rot.rotation), *rot.cycle));
}

TEST(Count, K4AndCycles) {
    const auto k4 = gen_identical(Graph::complete(4), 4);
    const auto id = ColourPattern::identity(4);
    const auto c = count_solutions(k4, id);
    EXPECT_EQ(c.status, OracleStatus::found);
    EXPECT_EQ(c.count, oracle_ref::permutation_cycle_count(k4, id));
    EXPECT_EQ(c.count, 24u);
    EXPECT_EQ(count_solutions(k4, ColourPattern::constant(4, 0)).count, 3u);
    EXPECT_EQ(oracle_ref::permutation_cycle_count(k4, ColourPattern::constant(4, 0)), 3u);
    for (std::size_t n = 5; n <= 8; ++n) {
        const auto cn = gen_identical(Graph::cycle(n), n);
        const auto chi = ColourPattern::identity(n);
        EXPECT_EQ(count_solutions(cn, chi).count, 2 * n);
        EXPECT_EQ(oracle_ref::permutation_cycle_count(cn, chi), 2 * n);
        // Constant pattern: all 2n labellings are one cycle.
        EXPECT_EQ(count_solutions(cn, ColourPattern::constant(n, 0)).count, 1u);
    }
}

TEST(Count, EmptyColourGivesZero) {
    std::vector<std::shared_ptr<const Graph>> gs{std::make_shared<const Graph>(Graph::complete(6)),
                                                 std::make_shared<const Graph>(Graph::empty(6))};
    const GraphCollection g(6, gs);
    const auto c = count_solutions(g, ColourPattern({{0, 0, 1, 0, 0, 0}}));
    EXPECT_EQ(c.status, OracleStatus::no_solution);
    EXPECT_EQ(c.count, 0u);
}

TEST(Count, MatchesPermutationEnumeration) {
    Rng rng(5);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 4 + uniform_below(rng, 4);
        const std::size_t m = 1 + uniform_below(rng, 2);
        const auto g = oracle_ref::random_collection(n, m, 0.7, rng);
        // Mix rotation-invariant and rotation-sensitive patterns.
        const auto kind = rep % 3 == 0 ? PatternKind::constant : (rep % 3 == 1 ? PatternKind::random : PatternKind::alternating);
        if (kind == PatternKind::alternating && (m < 2 || n % 2)) continue;
        const auto chi = gen_pattern(kind, n, m, rng());
        const auto c = count_solutions(g, chi);
        EXPECT_EQ(c.sequences, oracle_ref::pattern_sequences(g, chi));
        EXPECT_EQ(c.count, oracle_ref::permutation_cycle_count(g, chi)) << "n=" << n;
        EXPECT_EQ(c.sequences, c.count * c.symmetries);
    }
}

TEST(Count, SymmetryGroup) {
    EXPECT_EQ(pattern_symmetry_count(ColourPattern::constant(6, 0)), 12u);
    EXPECT_EQ(pattern_symmetry_count(ColourPattern::identity(6)), 1u);
    EXPECT_EQ(pattern_symmetry_count(ColourPattern({{0, 1, 0, 1}})), 4u);
    EXPECT_EQ(pattern_symmetry_count(ColourPattern({{0, 0, 1, 1, 1, 1}})), 2u);
}
