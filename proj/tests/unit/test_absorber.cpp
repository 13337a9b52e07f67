#include <gtest/gtest.h>

#include "hampat/absorber.hpp"
#include "hampat/embed.hpp"
#include "hampat/errors.hpp"
#include "hampat/instances.hpp"
#include "oracles.hpp"

using namespace hampat;

namespace {

struct Fixture {
    GraphCollection h;
    RmbgTemplate tpl;
    VertexSet reservoir;
    AbsorberStructure s;
};

Fixture make(std::size_t n, std::size_t m, std::size_t removed, std::uint64_t seed) {
    const auto g = gen_random_dirac(n, 3, 0.2, seed);
    const auto chi = gen_pattern(PatternKind::random, n, 3, seed + 1);
    Fixture f{reduce_pattern_to_identity(g, chi), build_rmbg(m, static_cast<double>(removed) / static_cast<double>(m), seed).tpl, {}, {}};
    f.reservoir = sample_reservoir(f.h, f.tpl.z_count() + 2, -0.5, seed, 20).reservoir;
    const auto zs = f.reservoir.to_vector();
    f.s = build_absorbing_structure(f.h, f.reservoir, zs[0], zs[1], f.tpl, {0, seed, 20});
    return f;
}

std::vector<Vertex> interior(const ColouredWalk& w) { return {w.vertices.begin() + 1, w.vertices.end() - 1}; }

}  // namespace

TEST(Absorber, Counts) {
    const auto f = make(300, 3, 2, 1);
    EXPECT_EQ(f.s.t, absorber_colour_count(f.tpl));
    EXPECT_EQ(f.s.t, 4 * f.tpl.edge_count() + 2);
    EXPECT_EQ(f.s.a(), absorber_size(f.tpl));
    EXPECT_EQ(f.s.a(), 4 * f.tpl.edge_count() + 1 - f.tpl.m);
    // t = a + m + 1: the path has t edges, so t - 1 interior vertices.
    EXPECT_EQ(f.s.t, f.s.a() + f.tpl.m + 1);
    EXPECT_EQ(f.s.gadgets.size(), f.tpl.x_count());
    EXPECT_EQ(f.s.cherry_middles.size(), f.tpl.x_count() + 1);
    EXPECT_FALSE(f.s.absorbing_set.test(f.s.z1));
    EXPECT_EQ(f.s.absorbing_set.count_and(f.reservoir), 0u);
}

TEST(Absorber, GadgetWindowsTileColours) {
    const auto f = make(300, 3, 2, 2);
    std::vector<int> used(f.s.t, 0);
    used[0] = used[1] = 1;
    for (std::size_t i = 0; i < f.s.gadgets.size(); ++i) {
        const auto [lo, hi] = f.s.window(i);
        EXPECT_EQ(hi - lo + 1, f.s.gadgets[i].tpl.colour_count());
        for (Colour c = lo; c <= hi; ++c) ++used[c];
        ++used[hi + 1];
        ++used[hi + 2];
        // Every gadget edge really lies in its window colour.
        for (const auto& e : f.s.gadgets[i].tpl.pattern().edges)
            EXPECT_TRUE(f.h.has_edge(lo + e.colour, f.s.gadgets[i].image[e.u], f.s.gadgets[i].image[e.v]));
    }
    for (std::size_t c = 0; c < f.s.t; ++c) EXPECT_EQ(used[c], 1) << "colour " << c;
}

TEST(Absorber, EveryLeftoverSetIsAbsorbed) {
    const auto f = make(300, 3, 2, 3);
    const auto z = f.s.z_image;
    ASSERT_EQ(z.size(), 5u);
    const auto expect_colours = [&] {
        std::vector<Colour> c(f.s.t);
        std::iota(c.begin(), c.end(), 0);
        return c;
    }();
    for (const auto& pick : oracle_ref::subsets(z.size(), 3)) {
        std::vector<Vertex> leftover;
        for (auto i : pick) leftover.push_back(z[i]);
        const ColouredWalk w = absorb(f.s, leftover);
        EXPECT_TRUE(verify_coloured_path(f.h, w));
        EXPECT_EQ(w.front(), f.s.z1);
        EXPECT_EQ(w.back(), f.s.z2);
        EXPECT_EQ(w.colours, expect_colours);
        VertexSet expect = f.s.absorbing_set;
        for (Vertex v : leftover) expect.set(v);
        const auto in = interior(w);
        EXPECT_EQ(VertexSet::from_range(300, in), expect);
        EXPECT_EQ(in.size(), expect.count());
    }
}

TEST(Absorber, RejectsBadLeftover) {
    const auto f = make(300, 3, 2, 4);
    const auto z = f.s.z_image;
    EXPECT_THROW((void)absorb(f.s, {z[0], z[1]}), std::invalid_argument);
    EXPECT_THROW((void)absorb(f.s, {z[0], z[0], z[1]}), std::invalid_argument);
    EXPECT_THROW((void)absorb(f.s, {z[0], z[1], f.s.z1}), std::invalid_argument);
    Vertex outside = 0;
    while (f.reservoir.test(outside)) ++outside;
    EXPECT_THROW((void)absorb(f.s, {z[0], z[1], outside}), std::invalid_argument);
}

TEST(Absorber, ColourBaseShiftsEverything) {
    const auto g = gen_random_dirac(300, 2, 0.2, 5);
    const auto h = reduce_pattern_to_identity(g, gen_pattern(PatternKind::alternating, 300, 2));
    const auto tpl = build_rmbg(2, 0.5, 5).tpl;
    const auto res = sample_reservoir(h, tpl.z_count() + 2, -0.5, 5, 20).reservoir;
    const auto zs = res.to_vector();
    const auto s = build_absorbing_structure(h, res, zs[0], zs[1], tpl, {20, 6, 20});
    const auto w = absorb(s, {s.z_image[0], s.z_image[2]});
    EXPECT_EQ(w.colours.front(), 20u);
    EXPECT_EQ(w.colours.back(), 20 + s.t - 1);
    EXPECT_TRUE(verify_coloured_path(h, w));
}

TEST(Absorber, SizeMismatchThrows) {
    const auto g = gen_random_dirac(300, 1, 0.2, 6);
    const auto h = reduce_pattern_to_identity(g, ColourPattern::constant(300, 0));
    const auto tpl = build_rmbg(2, 0.5, 6).tpl;
    VertexSet res(300);
    for (Vertex v = 0; v < 4; ++v) res.set(v);
    EXPECT_THROW((void)build_absorbing_structure(h, res, 0, 1, tpl), std::invalid_argument);
    EXPECT_THROW((void)build_absorbing_structure(h, res, 0, 0, tpl), std::invalid_argument);
}

TEST(Absorber, EmbedGadgetWindowChecked) {
    const auto g = gen_identical(Graph::complete(40), 40);
    EXPECT_THROW((void)embed_gadget(g, 0, 4, {0, 1}, VertexSet(40)), std::invalid_argument);
    const auto e = embed_gadget(g, 3, 8, {0, 1}, VertexSet(40));
    EXPECT_EQ(e.image[e.tpl.a(1)], 0u);
    EXPECT_EQ(e.image[e.tpl.a(2)], 1u);
}
