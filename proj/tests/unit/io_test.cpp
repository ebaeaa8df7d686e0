#include "generators.hpp"
#include "hypercol/error.hpp"
#include "hypercol/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace hypercol;

namespace {

HypergraphFile read(const std::string& text)
{
    std::istringstream in(text);
    return read_hypergraph_file(in);
}

std::size_t error_line(const std::string& text)
{
    try {
        read(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no ParseError for:\n" << text;
    return 999;
}

} // namespace

TEST(HypergraphFile, ParsesCommentsAndWeights)
{
    const auto f = read("c hello\np hygr 3 2\ne 1 2\nc mid\ne 3 2 1\nw 2 3/4\nw 3 5\n");
    EXPECT_TRUE(f.weighted);
    EXPECT_EQ(f.graph.base().num_edges(), 2U);
    EXPECT_EQ(f.graph.weight(1), Weight(1));
    EXPECT_EQ(f.graph.weight(2), Weight(3, 4));
    EXPECT_EQ(f.graph.weight(3), Weight(5));
}

TEST(HypergraphFile, ErrorsNameTheLine)
{
    EXPECT_EQ(error_line("e 1 2\n"), 1U);
    EXPECT_EQ(error_line("p hygr 3 1\np hygr 3 1\n"), 2U);
    EXPECT_EQ(error_line("p hygr 3 1\ne 1 4\n"), 2U);
    EXPECT_EQ(error_line("p hygr 3 2\ne 1 2\ne 2 1\n"), 3U);
    EXPECT_EQ(error_line("p hygr 3 1\ne 1 1\n"), 2U);
    EXPECT_EQ(error_line("p hygr 3 1\ne\n"), 2U);
    EXPECT_EQ(error_line("p hygr 3 1\ne 1 2\nx 1\n"), 3U);
    EXPECT_EQ(error_line("p hygr 3 1\ne 1 2\nw 1 1/0\n"), 3U);
    EXPECT_EQ(error_line("p hygr 3 1\ne 1 2\nw 1 -1\n"), 3U);
    EXPECT_EQ(error_line("p hygr 3 1\ne 1 2\nw 1 1\nw 1 2\n"), 4U);
    EXPECT_EQ(error_line("p hygr 3 1\ne 1 x\n"), 2U);
    EXPECT_EQ(error_line("p hygr 3 2\ne 1 2\n"), 0U);
    EXPECT_EQ(error_line(""), 0U);
}

TEST(HypergraphFile, RoundTripsRandomInstances)
{
    testkit::Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = testkit::uniform(rng, 1, 15);
        const Hypergraph g = testkit::random_hypergraph(rng, n, testkit::uniform(rng, 0, 20), 1, 4);
        const WeightedHypergraph w(g, testkit::random_weights(rng, n));
        std::ostringstream out;
        write_weighted_hypergraph(out, w, std::vector<std::string>{"round trip"});
        const auto back = read(out.str());
        ASSERT_EQ(back.graph, w) << out.str();
        ASSERT_EQ(parse_hypergraph(to_text(g)), g);
    }
}

TEST(Weight, FormatAndParse)
{
    EXPECT_EQ(format_weight(Weight(6, 4)), "3/2");
    EXPECT_EQ(format_weight(Weight(4)), "4/1");
    EXPECT_EQ(parse_weight("6/4"), Weight(3, 2));
    EXPECT_EQ(parse_weight("7"), Weight(7));
    EXPECT_THROW(parse_weight("1/0"), ParseError);
    EXPECT_THROW(parse_weight("a"), ParseError);
}

TEST(Precoloring, ReadWrite)
{
    PartialColoring c(4, 3);
    c.assign(1, 2);
    c.assign(4, 3);
    std::stringstream s;
    write_precoloring(s, c);
    EXPECT_EQ(read_precoloring(s, 4, 3), c);

    std::istringstream bad_color("k 1 4\n");
    EXPECT_THROW(read_precoloring(bad_color, 4, 3), ParseError);
    std::istringstream twice("k 1 1\nk 1 2\n");
    EXPECT_THROW(read_precoloring(twice, 4, 3), ParseError);
}

TEST(Coloring, ReadWrite)
{
    PartialColoring c(3, 2);
    c.assign(1, 1);
    c.assign(2, 2);
    c.assign(3, 1);
    std::stringstream s;
    write_coloring(s, Status::Colorable, &c);
    const auto f = read_coloring(s, 3, 2);
    EXPECT_EQ(f.status, Status::Colorable);
    EXPECT_EQ(f.coloring, c);

    std::stringstream none;
    write_coloring(none, Status::Uncolorable, nullptr);
    EXPECT_EQ(none.str(), "s UNCOLORABLE\n");
    EXPECT_EQ(read_coloring(none, 3).status, Status::Uncolorable);

    std::istringstream inferred("v 1 4\nv 2 1\n");
    EXPECT_EQ(read_coloring(inferred, 2).coloring.r(), 4U);
}

TEST(VertexSet, ReadWrite)
{
    std::stringstream s;
    const std::vector<Vertex> set{2, 5};
    write_vertex_set(s, set, Weight(5, 2));
    EXPECT_NE(s.str().find("s STABLE 2"), std::string::npos);
    EXPECT_NE(s.str().find("x 5/2"), std::string::npos);
    EXPECT_EQ(read_vertex_set(s, 5), set);
}
