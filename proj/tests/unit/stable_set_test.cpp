#include "generators.hpp"
#include "hypercol/error.hpp"
#include "hypercol/matching.hpp"
#include "hypercol/solvers.hpp"
#include "hypercol/structure.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hypercol;

TEST(StableSet, FanoOptimumIsFour)
{
    const auto out = max_stable_set_bounded(testkit::fano_plane(), 3, 1);
    ASSERT_TRUE(out.stable_set);
    EXPECT_EQ(out.stable_set->size(), 4U);
    EXPECT_TRUE(is_stable(testkit::fano_plane(), *out.stable_set));
}

TEST(StableSet, AgreesWithSubsetEnumeration)
{
    testkit::Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        const std::size_t k = testkit::uniform(rng, 2, 4);
        const std::size_t n = testkit::uniform(rng, k, 12);
        const std::size_t s = testkit::uniform(rng, 1, 2);
        const Hypergraph g = testkit::random_hitting_hypergraph(rng, n, testkit::uniform(rng, 0, 2 * n), k, k, s);
        const auto out = max_stable_set_bounded(g, k, s);
        ASSERT_TRUE(out.stable_set);
        ASSERT_TRUE(is_stable(g, *out.stable_set));
        ASSERT_EQ(out.stable_set->size(), testkit::naive_max_stable_size(g));
        ASSERT_GE(out.stable_set->size() + k * s, n);
    }
}

TEST(StableSet, PromiseViolation)
{
    const Hypergraph g(4, {{1, 2}, {3, 4}});
    const auto out = max_stable_set_bounded(g, 2, 1);
    EXPECT_FALSE(out.stable_set);
    ASSERT_TRUE(out.promise_witness);
    EXPECT_EQ(out.promise_witness->size(), 2U);
}

TEST(StableSet, EdgelessAndNonUniform)
{
    const auto out = max_stable_set_bounded(Hypergraph(3), 2, 1);
    ASSERT_TRUE(out.stable_set);
    EXPECT_EQ(out.stable_set->size(), 3U);
    EXPECT_THROW(max_stable_set_bounded(Hypergraph(3, {{1, 2}, {1, 2, 3}}), 2, 1), PreconditionError);
}
