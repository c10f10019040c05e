#include <gtest/gtest.h>

#include <random>

#include "heavycycle/generators.hpp"
#include "heavycycle/oracle.hpp"
#include "support/fixtures.hpp"

using namespace heavycycle;
namespace ht = heavycycle::testing;

namespace {

// Number of simple cycles of the complete digraph on n vertices, loops
// included when `loops`: sum over l of C(n, l) (l - 1)!.
std::uint64_t complete_cycle_count(std::uint64_t n, bool loops) {
    std::uint64_t total = 0;
    for (std::uint64_t l = loops ? 1 : 2; l <= n; ++l) {
        std::uint64_t falling = 1;  // n (n-1) ... (n-l+1) / l
        for (std::uint64_t i = 0; i < l; ++i) falling *= n - i;
        total += falling / l;
    }
    return total;
}

// Brute force: DFS over paths that start at their least vertex.
std::vector<std::vector<VertexId>> naive_cycles(const WeightedDigraph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    std::vector<char> on(g.vertex_count(), 0);
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        for (const OutArc& a : g.out_arcs(v)) {
            if (a.head == path.front()) {
                out.push_back(path);
            } else if (a.head > path.front() && !on[a.head]) {
                on[a.head] = 1;
                path.push_back(a.head);
                dfs(a.head);
                path.pop_back();
                on[a.head] = 0;
            }
        }
    };
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        on[s] = 1;
        dfs(s);
        on[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Oracle, Triangle) {
    const auto cycles = enumerate_simple_cycles(ht::unit_triangle());
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_EQ(cycles[0].vertices, (std::vector<VertexId>{0, 1, 2}));
    EXPECT_EQ(cycles[0].weight, 3.0);
}

TEST(Oracle, CompleteDigraphK3) {
    const auto cycles = enumerate_simple_cycles(ht::complete_digraph(3));
    const std::vector<std::vector<VertexId>> expected{{0, 1}, {0, 1, 2}, {0, 2}, {0, 2, 1}, {1, 2}};
    ASSERT_EQ(cycles.size(), expected.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) EXPECT_EQ(cycles[i].vertices, expected[i]);
}

TEST(Oracle, CompleteDigraphCounts) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (bool loops : {false, true}) {
            const auto g = ht::complete_digraph(n, loops);
            const std::uint64_t count = for_each_simple_cycle(g, [](std::span<const VertexId>, Weight) {});
            EXPECT_EQ(count, complete_cycle_count(n, loops)) << n << (loops ? " with loops" : "");
        }
    }
}

TEST(Oracle, LoopsFirstWithinGroup) {
    const auto cycles = enumerate_simple_cycles(ht::complete_digraph(2, true, 0.5));
    ASSERT_EQ(cycles.size(), 3u);
    EXPECT_EQ(cycles[0].vertices, (std::vector<VertexId>{0}));
    EXPECT_EQ(cycles[1].vertices, (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(cycles[2].vertices, (std::vector<VertexId>{1}));
}

TEST(Oracle, MaxWeightOverwriteTriangle) {
    const auto best = max_weight_cycle(ht::overwrite_triangle());
    EXPECT_EQ(best.vertices, (std::vector<VertexId>{0, 1, 2}));
    EXPECT_NEAR(best.weight, 2.2, 1e-12);
    EXPECT_EQ(max_cycle_length(ht::overwrite_triangle()), 3u);
}

TEST(Oracle, Errors) {
    WeightedDigraph dag(3);
    dag.add_arc(0, 1, 1.0);
    dag.add_arc(1, 2, 1.0);
    try {
        max_weight_cycle(dag);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoCycle);
    }
    try {
        enumerate_simple_cycles(ht::complete_digraph(5), 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
    EXPECT_EQ(enumerate_simple_cycles(ht::complete_digraph(3), 5).size(), 5u);
}

TEST(OracleProperty, MatchesBruteForce) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 7;
        std::bernoulli_distribution coin(0.2 + 0.1 * (trial % 5));
        std::uniform_real_distribution<double> weight(0.0, 1.0);
        WeightedDigraph g(n);
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                if (coin(rng)) g.add_arc(u, v, weight(rng));
            }
        }
        const auto naive = naive_cycles(g);
        const auto cycles = enumerate_simple_cycles(g);
        ASSERT_EQ(cycles.size(), naive.size());
        std::vector<std::vector<VertexId>> ours;
        for (const auto& c : cycles) {
            ours.push_back(c.vertices);
            EXPECT_EQ(c.weight, make_cycle(g, c.vertices).weight);
        }
        EXPECT_EQ(ours, naive);
    }
}
