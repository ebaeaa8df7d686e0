#include "generators.hpp"
#include "hypercol/solvers.hpp"
#include "hypercol/structure.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hypercol;

TEST(HtFree, AgreesWithBacktracking)
{
    testkit::Rng rng(51);
    int tested = 0;
    for (int i = 0; tested < 120 && i < 5000; ++i) {
        const std::size_t t = testkit::uniform(rng, 1, 2);
        const Hypergraph g = testkit::random_crossing_hypergraph(rng, testkit::uniform(rng, 4, 10));
        if (testkit::naive_has_induced_one_edge(g, t))
            continue;
        ++tested;
        const auto out = solve_2col_htfree(g, t);
        const auto ref = testkit::naive_color(g, 2);
        ASSERT_NE(out.status, Status::PromiseViolation);
        ASSERT_EQ(out.status == Status::Colorable, ref.has_value());
        if (out.coloring)
            ASSERT_TRUE(validate_coloring(g, *out.coloring));
    }
    EXPECT_EQ(tested, 120);
}

TEST(HtFree, ViolationReturnsInducedCopy)
{
    testkit::Rng rng(53);
    for (int i = 0; i < 200; ++i) {
        const std::size_t t = testkit::uniform(rng, 1, 2);
        const Hypergraph g = testkit::random_hypergraph(rng, 8, testkit::uniform(rng, 1, 10), 2, 3);
        const auto out = solve_2col_htfree(g, t);
        if (out.status != Status::PromiseViolation) {
            const auto ref = testkit::naive_color(g, 2);
            ASSERT_EQ(out.status == Status::Colorable, ref.has_value());
            continue;
        }
        ASSERT_TRUE(out.induced_copy);
        ASSERT_EQ(out.induced_copy->size(), t + 3);
        const auto inside = induced_edges(g, *out.induced_copy);
        ASSERT_EQ(inside.size(), 1U);
        ASSERT_EQ(g.edge(inside[0]).size(), 3U);
    }
}
