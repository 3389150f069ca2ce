#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "activity_forge/graph.hpp"
#include "support/corpus.hpp"

using namespace forge;
using namespace forge::testing;

TEST(ComponentCount, Triangle) {
    auto g = k3();
    EXPECT_EQ(component_count(g, g.empty_set()), 3u);
    EXPECT_EQ(component_count(g, g.full_set()), 1u);
}

TEST(ComponentCount, LoopDoesNotMerge) {
    auto g = loop1();
    EXPECT_EQ(component_count(g, g.subset({0})), 1u);
}

TEST(ComponentCount, RejectsForeignSubset) {
    auto g = k3();
    EXPECT_THROW(component_count(g, EdgeSubset(4)), InvalidSubset);
    EXPECT_THROW(EdgeSubset::from_ids(3, {3}), InvalidSubset);
}

TEST(ComponentSizeProfile, Examples) {
    auto g = k2();
    EXPECT_EQ(component_size_profile(g, g.empty_set()), (std::vector<std::size_t>{2, 0}));
    EXPECT_EQ(component_size_profile(g, g.subset({0})), (std::vector<std::size_t>{0, 1}));
    auto p = p3();
    EXPECT_EQ(component_size_profile(p, p.subset({0})), (std::vector<std::size_t>{1, 1, 0}));
}

TEST(IsForest, Examples) {
    auto g = k3();
    EXPECT_TRUE(is_forest(g, g.subset({0, 1})));
    EXPECT_FALSE(is_forest(g, g.full_set()));
    auto l = loop1();
    EXPECT_FALSE(is_forest(l, l.subset({0})));
}

TEST(IsSpanningForest, Examples) {
    auto g = k3();
    EXPECT_TRUE(is_spanning_forest(g, g.subset({0, 1})));
    EXPECT_FALSE(is_spanning_forest(g, g.subset({0})));
    auto d = two_k2();
    EXPECT_TRUE(is_spanning_forest(d, d.subset({0, 1})));
    EXPECT_EQ(component_count(d), 2u);
}

TEST(Multigraph, RejectsOutOfRangeEndpoint) {
    EXPECT_THROW(Multigraph(2, {{0, 2}}), InvalidGraph);
}

TEST(EdgeSubset, SetAlgebraAndOrdering) {
    auto a = EdgeSubset::from_ids(70, {1, 65});
    auto b = EdgeSubset::from_ids(70, {65, 69});
    EXPECT_EQ((a | b).ids(), (std::vector<EdgeId>{1, 65, 69}));
    EXPECT_EQ((a & b).ids(), (std::vector<EdgeId>{65}));
    EXPECT_EQ((a - b).ids(), (std::vector<EdgeId>{1}));
    EXPECT_EQ(a.complement().size(), 68u);
    EXPECT_TRUE(EdgeSubset::from_ids(70, {1}).is_subset_of(a));
    EXPECT_LT(EdgeSubset::from_ids(3, {0, 2}), EdgeSubset::from_ids(3, {1, 2}));
    EXPECT_LT(EdgeSubset::from_ids(3, {0, 1}), EdgeSubset::from_ids(3, {0, 2}));
    EXPECT_THROW(a | EdgeSubset(3), InvalidSubset);
}

// Randomized agreement with BFS plus the structural properties.
TEST(GraphProperties, RandomizedAgainstBfs) {
    std::mt19937_64 rng(7);
    for (const auto& [name, g] : random_multigraphs(80, 7, 11, 99)) {
        const auto n = g.vertex_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
            auto a = EdgeSubset::from_mask(g.edge_count(), mask);
            const auto k = component_count(g, a);
            ASSERT_EQ(k, bfs_components(g, a)) << name;

            auto profile = component_size_profile(g, a);
            std::size_t weighted = 0;
            for (std::size_t i = 0; i < profile.size(); ++i) weighted += (i + 1) * profile[i];
            ASSERT_EQ(weighted, n) << name;
            ASSERT_EQ(std::accumulate(profile.begin(), profile.end(), std::size_t{0}), k) << name;

            ASSERT_GE(a.size() + k, n) << name;
            ASSERT_EQ(a.size() + k == n, is_forest(g, a)) << name;

            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (a.contains(e)) continue;
                auto b = a;
                b.insert(e);
                const auto kb = component_count(g, b);
                ASSERT_TRUE(kb == k || kb + 1 == k) << name;
            }
        }
    }
}

TEST(SubsetSum, CountsPowerSet) {
    auto g = k3();
    EXPECT_EQ(subset_sum<std::uint64_t>(g, [](const EdgeSubset&) { return std::uint64_t{1}; }), 8u);
    EXPECT_THROW(subset_sum<int>(grid(5, 5), [](const EdgeSubset&) { return 1; }), GuardExceeded);
}
