#include "generators.hpp"
#include "hypercol/error.hpp"
#include "hypercol/reduction.hpp"
#include "hypercol/structure.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace hypercol;

namespace {

PartialColoring coloring_of(const testkit::ColorVector& c)
{
    PartialColoring p(c.size() - 1, 3);
    for (Vertex v = 1; v < c.size(); ++v)
        p.assign(v, c[v]);
    return p;
}

void expect_lift(const Hypergraph& gstar)
{
    const auto c = testkit::naive_color(gstar, 3);
    ASSERT_TRUE(c);
    const ReductionOutput r = reduce_3col_linear(gstar);
    const PartialColoring lifted = lift_3coloring(r, coloring_of(*c));
    EXPECT_TRUE(validate_coloring(r.hypergraph, lifted));
    for (Vertex v : gstar.vertices())
        EXPECT_EQ(lifted.color(r.source_vertex[v]), (*c)[v]);
}

} // namespace

TEST(Reduction, K4Counts)
{
    const ReductionOutput r = reduce_3col_linear(testkit::k4_graph());
    EXPECT_EQ(r.hypergraph.num_vertices(), 143914U);
    EXPECT_EQ(r.hypergraph.num_edges(), 330581U);
    EXPECT_EQ(reduction_vertex_count(4, 6), 143914U);
    EXPECT_EQ(reduction_edge_count(6), 330581U);
    EXPECT_TRUE(is_linear(r.hypergraph));
    EXPECT_TRUE(is_k_uniform(r.hypergraph, 3));
    EXPECT_EQ(r.gadgets.size(), 28U);
    EXPECT_EQ(r.gadgets.front().kind, GadgetKind::G2);
    EXPECT_LE(r.hitting_set.size(), 532U);
    EXPECT_EQ(r.hitting_set.size(), 478U);
}

TEST(Reduction, EachEdgeAddsTwelveVerticesAndThirtyEdges)
{
    const Hypergraph c5 = testkit::cycle_graph(5);
    std::vector<Edge> fewer(c5.edges().begin(), c5.edges().end() - 1);
    const ReductionOutput full = reduce_3col_linear(c5);
    const ReductionOutput less = reduce_3col_linear(Hypergraph(5, fewer));
    EXPECT_EQ(full.hypergraph.num_vertices() - less.hypergraph.num_vertices(), 12U);
    EXPECT_EQ(full.hypergraph.num_edges() - less.hypergraph.num_edges(), 30U);
}

TEST(Reduction, HittingSetMeetsEveryEdge)
{
    const ReductionOutput r = reduce_3col_linear(testkit::cycle_graph(5));
    const auto mask = vertex_mask(r.hypergraph.num_vertices(), r.hitting_set);
    for (const Edge& e : r.hypergraph.edges())
        ASSERT_TRUE(std::any_of(e.begin(), e.end(), [&](Vertex v) { return mask[v]; }));
}

TEST(Reduction, Lifts)
{
    expect_lift(Hypergraph(2, {{1, 2}}));
    expect_lift(testkit::cycle_graph(5));
    expect_lift(testkit::cycle_graph(3));
    expect_lift(testkit::petersen_graph());
}

TEST(Reduction, LiftRejectsImproperColoring)
{
    const ReductionOutput r = reduce_3col_linear(Hypergraph(2, {{1, 2}}));
    PartialColoring c(2, 3);
    c.assign(1, 1);
    c.assign(2, 1);
    EXPECT_THROW(lift_3coloring(r, c), PreconditionError);
}

TEST(Reduction, Preconditions)
{
    // Star with five leaves: degree 5.
    EXPECT_THROW(reduce_3col_linear(Hypergraph(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}})), PreconditionError);
    EXPECT_THROW(reduce_3col_linear(Hypergraph(3, {{1, 2, 3}})), PreconditionError);
}

TEST(Reduction, EdgeColoringIsProper)
{
    const ReductionOutput r = reduce_3col_linear(testkit::petersen_graph());
    EXPECT_TRUE(testkit::naive_proper_edge_coloring(r.source, r.edge_coloring, 5));
}
