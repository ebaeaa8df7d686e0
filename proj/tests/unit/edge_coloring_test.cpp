#include "generators.hpp"
#include "hypercol/edge_coloring.hpp"
#include "hypercol/error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace hypercol;

namespace {

void expect_good(const Hypergraph& g)
{
    const auto colors = misra_gries_edge_color(g);
    const Color bound = static_cast<Color>(max_degree(g) + 1);
    EXPECT_TRUE(testkit::naive_proper_edge_coloring(g, colors, bound));
    EXPECT_TRUE(is_proper_edge_coloring(g, colors));
}

} // namespace

TEST(MisraGries, NamedGraphs)
{
    expect_good(Hypergraph(3, {{1, 2}, {2, 3}}));
    expect_good(testkit::k4_graph());
    expect_good(testkit::petersen_graph());
    expect_good(testkit::cycle_graph(5));
    expect_good(Hypergraph(3));
    EXPECT_EQ(max_degree(testkit::petersen_graph()), 3U);
}

TEST(MisraGries, RandomGraphs)
{
    testkit::Rng rng(91);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = testkit::uniform(rng, 2, 40);
        const double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
        expect_good(testkit::random_graph(rng, n, p));
    }
}

TEST(MisraGries, RejectsHyperedges)
{
    EXPECT_THROW(misra_gries_edge_color(Hypergraph(3, {{1, 2, 3}})), PreconditionError);
}

TEST(EdgeColoring, ProperCheck)
{
    const Hypergraph g(3, {{1, 2}, {2, 3}});
    EXPECT_TRUE(is_proper_edge_coloring(g, std::vector<Color>{1, 2}));
    EXPECT_FALSE(is_proper_edge_coloring(g, std::vector<Color>{1, 1}));
    EXPECT_FALSE(is_proper_edge_coloring(g, std::vector<Color>{0, 1}));
    EXPECT_FALSE(is_proper_edge_coloring(g, std::vector<Color>{1}));
}
