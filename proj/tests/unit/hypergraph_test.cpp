#include "hypercol/error.hpp"
#include "hypercol/hypergraph.hpp"

#include <gtest/gtest.h>

using namespace hypercol;

TEST(Hypergraph, SortsEdgesAndKeepsOrder)
{
    const Hypergraph g(4, {{3, 1}, {4, 2, 1}});
    ASSERT_EQ(g.num_edges(), 2U);
    EXPECT_EQ(g.edge(0), (Edge{1, 3}));
    EXPECT_EQ(g.edge(1), (Edge{1, 2, 4}));
    EXPECT_EQ(g.max_edge_size(), 3U);
}

TEST(Hypergraph, Incidence)
{
    const Hypergraph g(4, {{1, 2}, {2, 3}, {1, 2, 3}});
    EXPECT_EQ(g.degree(2), 3U);
    EXPECT_EQ(g.degree(4), 0U);
    const auto inc = g.incident(1);
    EXPECT_EQ(std::vector<std::size_t>(inc.begin(), inc.end()), (std::vector<std::size_t>{0, 2}));
}

TEST(Hypergraph, RejectsBadEdges)
{
    EXPECT_THROW(Hypergraph(3, {{}}), PreconditionError);
    EXPECT_THROW(Hypergraph(3, {{1, 4}}), PreconditionError);
    EXPECT_THROW(Hypergraph(3, {{0, 1}}), PreconditionError);
    EXPECT_THROW(Hypergraph(3, {{1, 1}}), PreconditionError);
    EXPECT_THROW(Hypergraph(3, {{1, 2}, {2, 1}}), PreconditionError);
}

TEST(Hypergraph, EmptyGraph)
{
    const Hypergraph g(0);
    EXPECT_EQ(g.num_vertices(), 0U);
    EXPECT_EQ(g.max_edge_size(), 0U);
    EXPECT_TRUE(g.vertices().empty());
}

TEST(WeightedHypergraph, Weights)
{
    const WeightedHypergraph w(Hypergraph(3, {{1, 2}}), {Weight(1, 2), Weight(3), Weight(0)});
    EXPECT_EQ(w.total_weight(), Weight(7, 2));
    const std::vector<Vertex> set{1, 2};
    EXPECT_EQ(w.weight_of(set), Weight(7, 2));
    EXPECT_THROW(WeightedHypergraph(Hypergraph(2), {Weight(1)}), PreconditionError);
    EXPECT_THROW(WeightedHypergraph(Hypergraph(1), {Weight(-1)}), PreconditionError);
    EXPECT_EQ(WeightedHypergraph(Hypergraph(2)).total_weight(), Weight(2));
}

TEST(PartialColoring, DomainAndClasses)
{
    PartialColoring c(5, 3);
    c.assign(2, 1);
    c.assign(4, 3);
    c.assign(5, 1);
    EXPECT_EQ(c.domain(), (std::vector<Vertex>{2, 4, 5}));
    EXPECT_EQ(c.color_class(1), (std::vector<Vertex>{2, 5}));
    EXPECT_FALSE(c.is_total());
    EXPECT_THROW(c.assign(1, 4), PreconditionError);
    EXPECT_THROW(c.assign(6, 1), PreconditionError);
    c.unassign(2);
    EXPECT_EQ(c.domain_size(), 2U);
}

TEST(Matching, CoveredVertices)
{
    const Hypergraph g(6, {{1, 2}, {3, 4, 5}, {2, 6}});
    const Matching m{{1, 2}};
    EXPECT_EQ(m.covered_vertices(g), (std::vector<Vertex>{2, 3, 4, 5, 6}));
}
