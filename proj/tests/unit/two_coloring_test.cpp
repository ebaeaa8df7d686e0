#include "generators.hpp"
#include "hypercol/error.hpp"
#include "hypercol/matching.hpp"
#include "hypercol/solvers.hpp"
#include "hypercol/structure.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hypercol;

TEST(TwoColoring, FanoIsNotTwoColorable)
{
    const auto out = solve_2col_3bounded(testkit::fano_plane(), 1);
    EXPECT_EQ(out.status, Status::Uncolorable);
    EXPECT_FALSE(testkit::naive_color(testkit::fano_plane(), 2));
}

TEST(TwoColoring, AgreesWithBacktracking)
{
    testkit::Rng rng(31);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = testkit::uniform(rng, 1, 12);
        const std::size_t s = testkit::uniform(rng, 1, 3);
        const Hypergraph g = testkit::random_hitting_hypergraph(rng, n, testkit::uniform(rng, 0, 3 * n), 2, 3, s);
        const std::size_t nu = max_matching_exact(g).size();
        const auto out = solve_2col_3bounded(g, nu);
        const auto ref = testkit::naive_color(g, 2);
        ASSERT_NE(out.status, Status::PromiseViolation);
        ASSERT_EQ(out.status == Status::Colorable, ref.has_value());
        if (out.coloring)
            ASSERT_TRUE(testkit::naive_proper(g, std::vector<Color>(out.coloring->raw().begin(),
                                                                    out.coloring->raw().end()), 2));
    }
}

TEST(TwoColoring, PromiseViolationCarriesMatching)
{
    const Hypergraph g(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    const auto out = solve_2col_3bounded(g, 1);
    ASSERT_EQ(out.status, Status::PromiseViolation);
    ASSERT_TRUE(out.promise_witness);
    EXPECT_EQ(out.promise_witness->size(), 2U);
    EXPECT_TRUE(is_matching(g, *out.promise_witness));

    SolveOptions force;
    force.ignore_promise = true;
    EXPECT_EQ(solve_2col_3bounded(g, 1, force).status, Status::Colorable);
}

TEST(TwoColoring, SingletonEdgeIsUncolorable)
{
    EXPECT_EQ(solve_2col_3bounded(Hypergraph(2, {{1}}), 1).status, Status::Uncolorable);
}

TEST(TwoColoring, RejectsLargeEdges)
{
    EXPECT_THROW(solve_2col_3bounded(Hypergraph(4, {{1, 2, 3, 4}}), 1), PreconditionError);
}

TEST(TwoColoring, ThreadCountDoesNotChangeAnswer)
{
    testkit::Rng rng(33);
    for (int i = 0; i < 60; ++i) {
        const Hypergraph g = testkit::random_hitting_hypergraph(rng, 12, 30, 2, 3, 3);
        const std::size_t nu = max_matching_exact(g).size();
        SolveOptions many;
        many.threads = 8;
        const auto a = solve_2col_3bounded(g, nu);
        const auto b = solve_2col_3bounded(g, nu, many);
        ASSERT_EQ(a.status, b.status);
        ASSERT_EQ(a.coloring, b.coloring);
    }
}

TEST(TwoColoring, ExtendTwoColoring)
{
    const Hypergraph g(4, {{1, 2, 3}, {3, 4}});
    PartialColoring seed(4, 2);
    seed.assign(1, 1);
    seed.assign(2, 1);
    const auto done = extend_two_coloring(g, seed);
    ASSERT_TRUE(done);
    EXPECT_TRUE(validate_coloring(g, *done));
    EXPECT_EQ(done->color(3), 2U);
    EXPECT_EQ(done->color(4), 1U);
}
