#include "generators.hpp"
#include "hypercol/structure.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace hypercol;

TEST(Structure, UniformAndBounded)
{
    const Hypergraph g(4, {{1, 2, 3}, {2, 4}});
    EXPECT_FALSE(is_k_uniform(g, 3));
    EXPECT_TRUE(is_k_bounded(g, 3));
    EXPECT_FALSE(is_k_bounded(g, 2));
    EXPECT_TRUE(is_k_uniform(testkit::fano_plane(), 3));
    EXPECT_TRUE(is_k_uniform(Hypergraph(3), 5));
}

TEST(Structure, Linearity)
{
    EXPECT_TRUE(is_linear(testkit::fano_plane()));
    EXPECT_FALSE(is_linear(Hypergraph(4, {{1, 2, 3}, {1, 2, 4}})));
    EXPECT_TRUE(is_linear(testkit::k4_graph()));
}

TEST(Structure, LinearityMatchesPairwiseDefinition)
{
    testkit::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const Hypergraph g = testkit::random_hypergraph(rng, 9, testkit::uniform(rng, 0, 8), 2, 4);
        bool linear = true;
        for (std::size_t a = 0; a < g.num_edges(); ++a)
            for (std::size_t b = a + 1; b < g.num_edges(); ++b) {
                std::size_t common = 0;
                for (Vertex v : g.edge(a))
                    common += std::count(g.edge(b).begin(), g.edge(b).end(), v);
                linear = linear && common <= 1;
            }
        ASSERT_EQ(is_linear(g), linear);
    }
}

TEST(Structure, StableAndInduced)
{
    const Hypergraph g = testkit::fano_plane();
    const std::vector<Vertex> line{1, 2, 3};
    const std::vector<Vertex> four{1, 2, 4, 7};
    EXPECT_FALSE(is_stable(g, line));
    EXPECT_TRUE(is_stable(g, four));
    EXPECT_EQ(induced_edges(g, line), (std::vector<std::size_t>{0}));
    const std::vector<Vertex> with_outside{1, 2, 99};
    EXPECT_TRUE(is_stable(g, with_outside));
}

TEST(Structure, Matchings)
{
    const Hypergraph g(6, {{1, 2}, {2, 3}, {4, 5}});
    EXPECT_TRUE(is_matching(g, Matching{{0, 2}}));
    EXPECT_FALSE(is_matching(g, Matching{{0, 1}}));
    EXPECT_FALSE(is_matching(g, Matching{{5}}));
    EXPECT_TRUE(is_maximal_matching(g, Matching{{0, 2}}));
    EXPECT_FALSE(is_maximal_matching(g, Matching{{2}}));
}

TEST(Structure, Colorings)
{
    const Hypergraph g(3, {{1, 2, 3}});
    PartialColoring c(3, 2);
    c.assign(1, 1);
    c.assign(2, 1);
    EXPECT_TRUE(is_partial_coloring(g, c));
    EXPECT_FALSE(validate_coloring(g, c));
    c.assign(3, 1);
    EXPECT_FALSE(is_partial_coloring(g, c));
    EXPECT_EQ(first_monochromatic_edge(g, c), 0U);
    c.assign(3, 2);
    EXPECT_TRUE(validate_coloring(g, c));
    EXPECT_FALSE(first_monochromatic_edge(g, c).has_value());
    EXPECT_FALSE(is_partial_coloring(g, PartialColoring(4, 2)));
}

TEST(Structure, VertexMask)
{
    const std::vector<Vertex> set{1, 3};
    EXPECT_EQ(vertex_mask(3, set), (std::vector<char>{0, 1, 0, 1}));
}

TEST(Structure, DocumentedExamples)
{
    EXPECT_TRUE(is_k_uniform(Hypergraph(3, {{1, 2, 3}}), 3));
    EXPECT_FALSE(is_k_uniform(Hypergraph(3, {{1, 2}, {1, 2, 3}}), 3));
    EXPECT_TRUE(is_k_bounded(Hypergraph(3, {{1, 2}, {1, 2, 3}}), 3));
    EXPECT_FALSE(is_k_bounded(Hypergraph(4, {{1, 2, 3, 4}}), 3));
    EXPECT_TRUE(is_k_bounded(Hypergraph(4), 1));
    EXPECT_FALSE(is_linear(Hypergraph(4, {{1, 2, 3}, {2, 3, 4}})));
    EXPECT_TRUE(is_linear(Hypergraph(3, {{1, 2, 3}})));
    const Hypergraph e(3, {{1, 2, 3}});
    EXPECT_TRUE(is_stable(e, std::vector<Vertex>{1, 2}));
    EXPECT_TRUE(is_stable(e, std::vector<Vertex>{}));

    PartialColoring c(3, 3);
    c.assign(1, 1);
    c.assign(2, 2);
    c.assign(3, 3);
    EXPECT_TRUE(validate_coloring(Hypergraph(3, {{1, 2}, {2, 3}, {1, 3}}), c));
}
