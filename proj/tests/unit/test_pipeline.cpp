#include <gtest/gtest.h>

#include "hampat/instances.hpp"
#include "hampat/oracle.hpp"
#include "hampat/pipeline.hpp"
#include "oracles.hpp"

using namespace hampat;

TEST(Plan, ColourAndVertexBookkeeping) {
    for (std::size_t n : {300u, 500u, 1000u, 1500u})
        for (std::size_t covered = 20; covered < 80; covered += 7) {
            const auto p = make_plan(n, 8, 0.05, 1, covered, 60);
            if (!p) continue;
            EXPECT_TRUE(p->consistent());
            EXPECT_EQ(p->t, 242u);
            EXPECT_EQ(p->a + p->kept + 1, p->t);
            EXPECT_EQ(p->reservoir, p->kept + covered + 2);
            EXPECT_EQ(p->a + p->reservoir + p->rest, n);
            // The connecting walk after the absorber has n - t edges.
            EXPECT_EQ(2 + p->paths * 7 + 2 * (p->paths - 1) + 2 * p->leftover + p->z_walk + 2, n - p->t);
        }
}

TEST(Plan, RejectsWhatDoesNotFit) {
    EXPECT_FALSE(make_plan(100, 8, 0.05, 1, 10, 60));  // absorber alone exceeds n
    EXPECT_FALSE(make_plan(500, 8, 0.05, 1, 3, 60));   // too few reservoir steps
    EXPECT_FALSE(make_plan(500, 1, 0.05, 1, 40, 60));
    EXPECT_FALSE(make_plan(500, 8, 0.05, 0, 40, 60));
}

TEST(Solve, RefusesBelowHalf) {
    const Instance cx = gen_counterexample(16);
    const auto r = solve(cx.graphs, *cx.pattern);
    EXPECT_EQ(r.status, SolveStatus::refused);
    EXPECT_FALSE(r.cycle);
    SolveOptions o;
    o.params.alpha = 0.2;
    const auto g = gen_random_dirac(300, 2, 0.1, 1);
    EXPECT_EQ(solve(g, gen_pattern(PatternKind::random, 300, 2, 1), o).status, SolveStatus::refused);
}

TEST(Solve, SmallModeUsesOracle) {
    const auto g = gen_identical(Graph::complete(9), 2);
    const auto chi = gen_pattern(PatternKind::alternating, 9, 2);
    const auto r = solve(g, chi);
    ASSERT_EQ(r.status, SolveStatus::solved);
    EXPECT_TRUE(verify_pattern_cycle(g, chi, *r.cycle));
    ASSERT_NE(r.trace.find("oracle"), nullptr);
}

TEST(Solve, SmallModeNeverInventsCycle) {
    // Dirac in colour 0, colour 1 a perfect matching only: block pattern
    // needs a colour-1 path of length 5, impossible.
    std::vector<Edge> match{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}};
    std::vector<std::shared_ptr<const Graph>> gs{std::make_shared<const Graph>(Graph::complete(10)),
                                                 std::make_shared<const Graph>(10, match)};
    const GraphCollection g(10, gs);
    const auto chi = gen_pattern(PatternKind::block, 10, 2);
    ASSERT_FALSE(oracle_ref::has_pattern_cycle(g, chi));
    const auto r = solve(g, chi);
    EXPECT_NE(r.status, SolveStatus::solved);
    EXPECT_FALSE(r.cycle);
}

TEST(Solve, ClassicalDiracInstance) {
    const auto base = gen_random_dirac(1000, 1, 0.2, 3)[0];
    const auto g = gen_identical(base, 1000);
    const auto chi = ColourPattern::identity(1000);
    const auto r = solve(g, chi);
    ASSERT_EQ(r.status, SolveStatus::solved) << r.message;
    EXPECT_TRUE(verify_pattern_cycle(g, chi, *r.cycle));
}

TEST(Solve, EveryPatternKindVerifies) {
    const auto g = gen_random_dirac(500, 4, 0.2, 4);
    for (auto kind : {PatternKind::identity, PatternKind::random, PatternKind::alternating, PatternKind::block,
                      PatternKind::constant}) {
        const auto chi = gen_pattern(kind, 500, 4, 5);
        SolveOptions o;
        o.params.seed = 6;
        const auto r = solve(g, chi, o);
        ASSERT_EQ(r.status, SolveStatus::solved) << to_string(kind) << ": " << r.message;
        EXPECT_TRUE(verify_pattern_cycle(g, chi, *r.cycle));
    }
}

TEST(Solve, TraceTilesColoursAndAccountsReservoir) {
    const auto g = gen_random_dirac(600, 3, 0.2, 7);
    const auto chi = gen_pattern(PatternKind::random, 600, 3, 7);
    const auto r = solve(g, chi);
    ASSERT_EQ(r.status, SolveStatus::solved) << r.message;
    std::vector<int> used(600, 0);
    for (const auto& s : r.trace.colour_segments)
        for (std::size_t c = s.first; c < s.first + s.count; ++c) ++used.at(c);
    for (int u : used) EXPECT_EQ(u, 1);
    const auto* plan = r.trace.find("plan");
    ASSERT_NE(plan, nullptr);
    const auto covered = *plan->get("covered");
    const auto kept = *plan->get("kept");
    EXPECT_EQ(*plan->get("reservoir"), covered + kept + 2);
    EXPECT_EQ(r.trace.colour_segments.front().count, static_cast<std::size_t>(*plan->get("t")));
}

TEST(Solve, Deterministic) {
    const auto g = gen_random_dirac(500, 2, 0.2, 8);
    const auto chi = gen_pattern(PatternKind::random, 500, 2, 8);
    SolveOptions o;
    o.params.seed = 42;
    const auto a = solve(g, chi, o);
    const auto b = solve(g, chi, o);
    ASSERT_EQ(a.status, SolveStatus::solved);
    EXPECT_EQ(*a.cycle, *b.cycle);
}

TEST(Solve, ExplicitGammaTooSmallFailsAtPlan) {
    const auto g = gen_random_dirac(500, 2, 0.2, 9);
    SolveOptions o;
    o.params.gamma = 0.002;
    const auto r = solve(g, gen_pattern(PatternKind::random, 500, 2, 9), o);
    EXPECT_EQ(r.status, SolveStatus::failed);
    EXPECT_EQ(r.failed_stage, "plan");
}

TEST(Solve, MismatchedPatternThrows) {
    const auto g = gen_random_dirac(40, 2, 0.2, 1);
    EXPECT_THROW((void)solve(g, ColourPattern::constant(39, 0)), std::invalid_argument);
    EXPECT_THROW((void)solve(g, ColourPattern::constant(40, 2)), std::invalid_argument);
}
