#include "generators.hpp"
#include "hypercol/error.hpp"
#include "hypercol/twosat.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace hypercol;
using namespace hypercol::twosat;

TEST(TwoSat, SmallCases)
{
    Instance contradiction(1);
    contradiction.add_unit(pos(1));
    contradiction.add_unit(neg(1));
    EXPECT_FALSE(solve(contradiction));
    EXPECT_TRUE(has_complementary_component(contradiction));

    Instance chain(3);
    chain.add(neg(1), pos(2)); // x1 -> x2
    chain.add(neg(2), pos(3)); // x2 -> x3
    chain.add_unit(pos(1));
    const auto a = solve(chain);
    ASSERT_TRUE(a);
    EXPECT_TRUE((*a)[1] && (*a)[2] && (*a)[3]);

    EXPECT_TRUE(solve(Instance(0)));
    EXPECT_THROW(chain.add(pos(4), pos(1)), PreconditionError);
    EXPECT_THROW(chain.add(pos(0), pos(1)), PreconditionError);
}

TEST(TwoSat, AgreesWithEnumeration)
{
    testkit::Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = testkit::uniform(rng, 1, 12);
        const Instance inst = testkit::random_two_sat(rng, n, testkit::uniform(rng, 0, 3 * n));
        const auto model = solve(inst);
        ASSERT_EQ(model.has_value(), testkit::naive_two_sat(inst).has_value());
        ASSERT_EQ(model.has_value(), !has_complementary_component(inst));
        if (model) {
            ASSERT_TRUE(testkit::naive_satisfies(inst, *model));
            ASSERT_TRUE(satisfies(inst, *model));
        }
    }
}

TEST(TwoSat, ComponentsAreConsistent)
{
    Instance inst(2);
    inst.add(neg(1), pos(2));
    inst.add(neg(2), pos(1));
    const auto comp = implication_components(inst);
    ASSERT_EQ(comp.size(), 4U);
    EXPECT_EQ(comp[0], comp[2]); // x1 and x2 imply each other
    EXPECT_EQ(comp[1], comp[3]);
    EXPECT_NE(comp[0], comp[1]);
}

TEST(TwoSat, DotOutput)
{
    Instance inst(1);
    inst.add(pos(1), pos(1));
    std::ostringstream out;
    write_implication_dot(out, inst);
    EXPECT_NE(out.str().find("digraph"), std::string::npos);
}
