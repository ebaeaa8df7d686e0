#include "cli.hpp"
#include "generators.hpp"
#include "hypercol/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hypercol;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("hypercol_cli_" + std::to_string(::getpid()) + "_"
                                            + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& text)
    {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name, const Hypergraph& g) { return file(name, to_text(g)); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    int run(std::vector<std::string> args)
    {
        args.insert(args.begin(), "hypercol");
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_);
    }

    static std::string slurp(const std::string& p)
    {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

} // namespace

TEST_F(Cli, FanoTwoColoringFails)
{
    const auto fano = file("fano.hygr", testkit::fano_plane());
    EXPECT_EQ(run({"solve", fano, "--mode", "2col3b", "--s", "1"}), cli::kExitNo);
    EXPECT_NE(out_.str().find("s UNCOLORABLE"), std::string::npos);
}

TEST_F(Cli, SingleEdgeStableSet)
{
    const auto f = file("m1.hygr", Hypergraph(3, {{1, 2, 3}}));
    EXPECT_EQ(run({"solve", f, "--mode", "stable", "--k", "3", "--s", "1"}), cli::kExitOk);
    std::istringstream in(out_.str());
    EXPECT_EQ(read_vertex_set(in, 3).size(), 2U);
}

TEST_F(Cli, PromiseViolationExit)
{
    const auto f = file("m2.hygr", Hypergraph(6, {{1, 2, 3}, {4, 5, 6}}));
    EXPECT_EQ(run({"solve", f, "--mode", "2col3b", "--s", "1"}), cli::kExitPromise);
    EXPECT_NE(out_.str().find("PROMISE-VIOLATION"), std::string::npos);
    EXPECT_EQ(run({"solve", f, "--mode", "2col3b", "--s", "1", "--force"}), cli::kExitOk);
}

TEST_F(Cli, PrecolorWithTrace)
{
    const auto f = file("g.hygr", Hypergraph(3, {{1, 2}, {1, 3}}));
    const auto pre = file("g.pre", "k 2 1\nk 3 2\n");
    EXPECT_EQ(run({"solve", f, "--mode", "precolor", "--r", "2", "--s", "1", "--precoloring", pre, "--trace"}),
              cli::kExitNo);
    EXPECT_FALSE(err_.str().empty());
}

TEST_F(Cli, AutoModeAndBrute)
{
    const auto tri = file("tri.hygr", Hypergraph(3, {{1, 2}, {2, 3}, {1, 3}}));
    EXPECT_EQ(run({"solve", tri, "--r", "3"}), cli::kExitOk);
    EXPECT_NE(err_.str().find("c mode brute"), std::string::npos);
    EXPECT_EQ(run({"solve", tri, "--r", "2", "--s", "1"}), cli::kExitNo);
}

TEST_F(Cli, BruteForceRefusesLargeInputs)
{
    const auto big = file("big.hygr", Hypergraph(60, {{1, 2, 3}}));
    EXPECT_EQ(run({"solve", big, "--mode", "brute", "--r", "3"}), cli::kExitCap);
}

TEST_F(Cli, InputErrors)
{
    EXPECT_EQ(run({"solve", path("missing.hygr")}), cli::kExitInput);
    const auto bad = file("bad.hygr", "p hygr 3 1\ne 1 9\n");
    EXPECT_EQ(run({"check", "linear", bad}), cli::kExitInput);
    EXPECT_NE(err_.str().find("line 2"), std::string::npos);
    EXPECT_EQ(run({"bogus"}), cli::kExitInput);
}

TEST_F(Cli, Checks)
{
    const auto fano = file("fano.hygr", testkit::fano_plane());
    EXPECT_EQ(run({"check", "linear", fano}), cli::kExitOk);
    EXPECT_NE(out_.str().find("CHECK linear PASS"), std::string::npos);
    const auto col = file("bad.col", "v 1 1\nv 2 1\nv 3 1\nv 4 2\nv 5 2\nv 6 2\nv 7 2\n");
    EXPECT_EQ(run({"check", "coloring", fano, col}), cli::kExitNo);
    EXPECT_EQ(run({"check", "uniform", fano, "--k", "3"}), cli::kExitOk);
    EXPECT_EQ(run({"check", "matching", fano, "--s", "1"}), cli::kExitOk);
    // A line plus any fourth point induces exactly one edge.
    EXPECT_EQ(run({"check", "htfree", fano, "--t", "1"}), cli::kExitNo);
}

TEST_F(Cli, GadgetLtimes)
{
    const auto k3 = file("k3.hygr", Hypergraph(3, {{1, 2}, {2, 3}, {1, 3}}));
    const auto m1 = file("m1.hygr", Hypergraph(3, {{1, 2, 3}}));
    EXPECT_EQ(run({"gadget", "ltimes", k3, m1, "--out", path("out.hygr")}), cli::kExitOk);
    EXPECT_EQ(parse_hypergraph(slurp(path("out.hygr"))).num_edges(), 6U);
    EXPECT_EQ(slurp(path("out.hygr")).rfind("c hypercol ", 0), 0U);
}

TEST_F(Cli, GadgetG1AndVerify)
{
    EXPECT_EQ(run({"gadget", "g1", "--out", path("g1.hygr"), "--cert", path("g1.cert")}), cli::kExitOk);
    const Hypergraph g = parse_hypergraph(slurp(path("g1.hygr")));
    EXPECT_EQ(g.num_vertices(), 5139U);
    EXPECT_EQ(g.num_edges(), 11800U);
    EXPECT_EQ(run({"verify", "certificate", path("g1.hygr"), path("g1.cert")}), cli::kExitOk);
    EXPECT_EQ(run({"verify", "g1", path("g1.hygr"), path("g1.cert")}), cli::kExitOk);

    // Drop the last edge: a hub or block K_4 loses an edge or a connector disappears.
    std::string text = slurp(path("g1.hygr"));
    text.erase(text.rfind("e "));
    const auto pos = text.find("p hygr 5139 11800");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 17, "p hygr 5139 11799");
    const auto tampered = file("tampered.hygr", text);
    EXPECT_EQ(run({"verify", "g1", tampered, path("g1.cert")}), cli::kExitNo);
}

TEST_F(Cli, ReduceAndVerify)
{
    const auto c5 = file("c5.graph", testkit::cycle_graph(5));
    ASSERT_EQ(run({"gadget", "reduce3col", c5, "--out", path("r.hygr"), "--cert", path("r.cert")}), cli::kExitOk);
    EXPECT_EQ(run({"verify", "reduction", path("r.hygr"), c5, "--cert", path("r.cert")}), cli::kExitOk);
    EXPECT_NE(out_.str().find("CHECK lift PASS"), std::string::npos);
    EXPECT_EQ(run({"solve", path("r.hygr"), "--mode", "brute", "--r", "3"}), cli::kExitCap);
}

TEST_F(Cli, Version)
{
    EXPECT_EQ(run({"--version"}), cli::kExitOk);
    EXPECT_NE(out_.str().find("0.1.0"), std::string::npos);
}
