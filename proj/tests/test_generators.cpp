#include <gtest/gtest.h>

#include "heavycycle/generators.hpp"

using namespace heavycycle;

namespace {

void expect_unit_outdegree(const WeightedDigraph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Weight d = g.weighted_outdegree(v);
        EXPECT_GE(d, 1.0) << "vertex " << v;
        EXPECT_LT(d, 1.0 + 1e-12) << "vertex " << v;
        for (const OutArc& a : g.out_arcs(v)) EXPECT_GT(a.weight, 0.0);
    }
}

}  // namespace

TEST(Generators, Deterministic) {
    EXPECT_EQ(gen_normalized_random(20, 3, 42), gen_normalized_random(20, 3, 42));
    EXPECT_NE(gen_normalized_random(20, 3, 42), gen_normalized_random(20, 3, 43));
    EXPECT_EQ(gen_loop_heavy(10, 0.3, 7), gen_loop_heavy(10, 0.3, 7));
    EXPECT_EQ(gen_layered_sink(4, 9), gen_layered_sink(4, 9));
    EXPECT_EQ(generate({Family::UnweightedOutdegreeD, 8, 2, 1}), gen_unweighted_outdegree_d(8, 2, 1));
}

TEST(Generators, NormalizedOutdegree) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 15;
        const auto g = gen_normalized_random(n, 1 + seed % n, seed);
        for (VertexId v = 0; v < n; ++v) EXPECT_EQ(g.out_arcs(v).size(), 1 + seed % n);
        expect_unit_outdegree(g);
    }
}

TEST(Generators, FullOutStar) {
    const auto g = gen_normalized_random(5, 5, 1);
    EXPECT_EQ(g.arc_count(), 25u);
    EXPECT_EQ(g.loop_count(), 5u);
    const auto loopless = gen_normalized_random(NormalizedRandomSpec{5, 4, false, {}}, 1);
    EXPECT_EQ(loopless.arc_count(), 20u);
    EXPECT_EQ(loopless.loop_count(), 0u);
}

TEST(Generators, Palette) {
    const auto g = gen_normalized_random(NormalizedRandomSpec{6, 2, true, {0.25, 1.0}}, 3);
    expect_unit_outdegree(g);
}

TEST(Generators, LoopHeavy) {
    const auto pair = gen_loop_heavy(2, 0.4, 0);
    EXPECT_EQ(pair.arc_count(), 4u);
    EXPECT_EQ(*pair.weight(0, 0), 0.4);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto g = gen_loop_heavy(3 + seed % 10, 0.05 * static_cast<double>(1 + seed % 19), seed);
        EXPECT_EQ(g.loop_count(), g.vertex_count());
        expect_unit_outdegree(g);
    }
}

TEST(Generators, UnweightedOutdegree) {
    const auto g = gen_unweighted_outdegree_d(10, 3, 5);
    EXPECT_EQ(g.loop_count(), 0u);
    for (VertexId v = 0; v < 10; ++v) {
        EXPECT_EQ(g.out_arcs(v).size(), 3u);
        EXPECT_EQ(g.weighted_outdegree(v), 3.0);
    }
}

TEST(Generators, LayeredHasOneSinkBlock) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto g = gen_layered_sink(2 + seed % 4, seed);
        expect_unit_outdegree(g);
        const auto parts = scc_decompose(g);
        EXPECT_EQ(parts.size(), 2 + seed % 4);
        const auto sink = sink_component(g);
        EXPECT_EQ(sink.back(), g.vertex_count() - 1);
    }
}

TEST(Generators, InvalidArguments) {
    EXPECT_THROW(gen_normalized_random(3, 4, 0), Error);
    EXPECT_THROW(gen_normalized_random(3, 0, 0), Error);
    EXPECT_THROW(gen_normalized_random(NormalizedRandomSpec{3, 3, false, {}}, 0), Error);
    EXPECT_THROW(gen_loop_heavy(1, 0.5, 0), Error);
    EXPECT_THROW(gen_loop_heavy(4, 1.0, 0), Error);
    EXPECT_THROW(gen_unweighted_outdegree_d(3, 3, 0), Error);
    EXPECT_THROW(gen_layered_sink(1, 0), Error);
    EXPECT_THROW(generate({Family::NormalizedRandom, 5, 1.5, 0}), Error);
    EXPECT_THROW(parse_family("dense"), Error);
    EXPECT_EQ(parse_family("layered"), Family::LayeredSink);
}
