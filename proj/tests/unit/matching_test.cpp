#include "generators.hpp"
#include "hypercol/matching.hpp"
#include "hypercol/structure.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hypercol;

TEST(Matching, GreedyIsFirstFitAndMaximal)
{
    const Hypergraph g(6, {{1, 2}, {2, 3}, {3, 4}, {5, 6}});
    EXPECT_EQ(greedy_maximal_matching(g).edges, (std::vector<std::size_t>{0, 2, 3}));
    testkit::Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        const Hypergraph h = testkit::random_hypergraph(rng, 10, testkit::uniform(rng, 0, 12), 1, 4);
        ASSERT_TRUE(is_maximal_matching(h, greedy_maximal_matching(h)));
    }
}

TEST(Matching, ExactAgreesWithRecursion)
{
    testkit::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const Hypergraph g = testkit::random_hypergraph(rng, 10, testkit::uniform(rng, 0, 14), 1, 4);
        const Matching m = max_matching_exact(g);
        ASSERT_TRUE(is_matching(g, m));
        ASSERT_EQ(m.size(), testkit::naive_matching_number(g));
        const std::size_t nu = m.size();
        if (nu > 0) {
            const Matching capped = max_matching_exact(g, nu - 1);
            ASSERT_EQ(capped.size(), nu);
            ASSERT_TRUE(is_matching(g, capped));
        }
    }
}

TEST(Matching, FanoHasMatchingNumberOne)
{
    EXPECT_EQ(max_matching_exact(testkit::fano_plane()).size(), 1U);
}

TEST(InducedOneEdge, AgreesWithSubsetScan)
{
    testkit::Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        const std::size_t t = testkit::uniform(rng, 0, 2);
        const Hypergraph g = testkit::random_hypergraph(rng, 8, testkit::uniform(rng, 0, 16), 2, 3);
        const auto w = find_induced_one_edge(g, t);
        ASSERT_EQ(w.has_value(), testkit::naive_has_induced_one_edge(g, t));
        if (w) {
            ASSERT_EQ(w->size(), t + 3);
            const auto inside = induced_edges(g, *w);
            ASSERT_EQ(inside.size(), 1U);
            ASSERT_EQ(g.edge(inside[0]).size(), 3U);
        }
    }
}

TEST(InducedMatching, FirstTwoDisjointEdges)
{
    const Hypergraph g(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    const auto m = find_induced_matching(g, 2);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->edges, (std::vector<std::size_t>{0, 1}));
}

TEST(InducedMatching, RejectsInducedExtraEdge)
{
    // The third edge lies inside the union of the first two.
    const Hypergraph g(6, {{1, 2, 3}, {4, 5, 6}, {1, 2, 4}});
    EXPECT_FALSE(find_induced_matching(g, 2).has_value());
    EXPECT_TRUE(find_induced_matching(g, 1).has_value());
}

TEST(Matching, DocumentedExamples)
{
    EXPECT_EQ(greedy_maximal_matching(Hypergraph(6, {{1, 2, 3}, {4, 5, 6}})).size(), 2U);
    EXPECT_EQ(greedy_maximal_matching(Hypergraph(5, {{1, 2, 3}, {3, 4, 5}})).edges, (std::vector<std::size_t>{0}));
    const Hypergraph g(7, {{1, 2, 3}, {4, 5, 6}, {1, 4, 7}});
    EXPECT_EQ(max_matching_exact(g).size(), 2U);
    EXPECT_EQ(max_matching_exact(Hypergraph(3)).size(), 0U);
    EXPECT_EQ(find_induced_one_edge(Hypergraph(4, {{1, 2, 3}}), 1), (std::vector<Vertex>{1, 2, 3, 4}));
    EXPECT_FALSE(find_induced_one_edge(Hypergraph(5, [] {
        std::vector<Edge> all;
        for (Vertex a = 1; a <= 5; ++a)
            for (Vertex b = a + 1; b <= 5; ++b)
                for (Vertex c = b + 1; c <= 5; ++c)
                    all.push_back({a, b, c});
        return all;
    }()), 1));
    const auto m = find_induced_matching(g, 2);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->edges, (std::vector<std::size_t>{0, 1}));
    EXPECT_FALSE(find_induced_matching(testkit::fano_plane(), 2));
}
