#include "hypercol/verify.hpp"

#include "hypercol/edge_coloring.hpp"
#include "hypercol/error.hpp"
#include "hypercol/structure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace hypercol {

void Report::add(std::string name, bool pass, std::string detail)
{
    checks.push_back({std::move(name), pass, std::move(detail)});
}

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(const std::string& name) const
{
    for (const CheckResult& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

void write_report(std::ostream& out, const Report& report)
{
    for (const CheckResult& c : report.checks) {
        out << "CHECK " << c.name << ' ' << (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty())
            out << ' ' << c.detail;
        out << '\n';
    }
    for (const std::string& note : report.notes)
        out << "NOTE " << note << '\n';
}

namespace {

std::size_t edges_missing(const Hypergraph& g, std::span<const Vertex> set)
{
    const auto mask = vertex_mask(g.num_vertices(), set);
    return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return std::none_of(e.begin(), e.end(), [&](Vertex v) { return mask[v]; });
    }));
}

std::string first_edge_text(const Hypergraph& g, std::size_t i)
{
    std::ostringstream out;
    out << "edge " << i << " {";
    for (std::size_t k = 0; k < g.edge(i).size(); ++k)
        out << (k ? "," : "") << g.edge(i)[k];
    out << '}';
    return out.str();
}

} // namespace

Report check_certificate(const Hypergraph& g, const GadgetCertificate& cert)
{
    Report report;
    const std::size_t n = g.num_vertices();

    report.add("linear", is_linear(g), "");
    report.add("uniform", is_k_uniform(g, 3), "3-uniform");

    std::vector<Vertex> z = cert.hitting_set;
    std::sort(z.begin(), z.end());
    const bool z_in_range = std::all_of(z.begin(), z.end(), [&](Vertex v) { return v >= 1 && v <= n; });
    const bool z_distinct = std::adjacent_find(z.begin(), z.end()) == z.end();
    report.add("z-size", z.size() <= 19 && z_in_range && z_distinct,
               "|Z| = " + std::to_string(z.size()) + (z_in_range ? "" : ", vertex out of range")
                   + (z_distinct ? "" : ", repeated vertex"));

    const bool anchors_ok =
        std::all_of(cert.anchors.begin(), cert.anchors.end(), [&](Vertex a) { return a >= 1 && a <= n; });
    const bool anchors_in_z = anchors_ok && std::all_of(cert.anchors.begin(), cert.anchors.end(), [&](Vertex a) {
                                  return std::binary_search(z.begin(), z.end(), a);
                              });
    report.add("anchors-in-z", anchors_in_z, "");

    const std::size_t missing = z_in_range ? edges_missing(g, z) : g.num_edges();
    report.add("z-deletion", missing == 0, std::to_string(missing) + " edges avoid Z");

    if (anchors_ok) {
        std::vector<std::size_t> heavy;
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            const Edge& e = g.edge(i);
            const auto hits = std::count_if(cert.anchors.begin(), cert.anchors.end(),
                                            [&](Vertex a) { return std::binary_search(e.begin(), e.end(), a); });
            if (hits > 1)
                heavy.push_back(i);
        }
        bool ok = false;
        std::string detail = std::to_string(heavy.size()) + " edges with two or more anchors";
        if (cert.kind == GadgetKind::G1) {
            ok = heavy.empty();
        } else {
            Edge abc(cert.anchors.begin(), cert.anchors.end());
            std::sort(abc.begin(), abc.end());
            ok = heavy.size() == 1 && g.edge(heavy.front()) == abc;
        }
        if (!ok && !heavy.empty())
            detail += ", first " + first_edge_text(g, heavy.front());
        report.add("anchor-multiplicity", ok, detail);
    } else {
        report.add("anchor-multiplicity", false, "anchor out of range");
    }

    const PartialColoring& w = cert.witness;
    const bool shape_ok = w.num_vertices() == n && w.r() <= 3;
    const bool valid = shape_ok && validate_coloring(g, w);
    std::string detail = shape_ok ? "" : "witness has the wrong size or more than 3 colors";
    if (shape_ok && !valid) {
        if (auto bad = first_monochromatic_edge(g, w))
            detail = "monochromatic " + first_edge_text(g, *bad);
        else
            detail = "witness does not color every vertex";
    }
    report.add("witness-valid", valid, detail);

    bool distinct = false;
    if (shape_ok && anchors_ok) {
        const Color ca = w.color(cert.anchors[0]);
        const Color cb = w.color(cert.anchors[1]);
        const Color cc = w.color(cert.anchors[2]);
        distinct = ca && cb && cc && ca != cb && cb != cc && ca != cc;
        detail = "anchor colors (" + std::to_string(ca) + "," + std::to_string(cb) + "," + std::to_string(cc) + ")";
    }
    report.add("witness-anchors-distinct", distinct, detail);
    return report;
}

namespace {

constexpr std::size_t kNoBlock = static_cast<std::size_t>(-1);

// Two block positions that may not share the color of anchor k.
struct PairConstraint {
    std::uint8_t p = 0;
    std::uint8_t q = 0;
    std::uint8_t anchor = 0;
};

struct Block {
    std::string name;
    std::array<Vertex, 4> vertices{};
    std::vector<PairConstraint> constraints;
};

struct TupleBlocks {
    std::array<std::size_t, 5> block{kNoBlock, kNoBlock, kNoBlock, kNoBlock, kNoBlock}; ///< H_0^T .. H_4^T
};

struct AnchorCase {
    std::array<Color, 3> colors{};
    Color gamma = 0;

    std::string text() const
    {
        return "anchors (" + std::to_string(colors[0]) + "," + std::to_string(colors[1]) + ","
               + std::to_string(colors[2]) + ")";
    }
};

std::vector<AnchorCase> two_equal_cases()
{
    std::vector<AnchorCase> cases;
    for (Color p = 1; p <= 3; ++p) {
        for (Color q = 1; q <= 3; ++q) {
            if (p == q)
                continue;
            const Color gamma = 6 - p - q;
            cases.push_back({{p, p, q}, gamma});
            cases.push_back({{p, q, p}, gamma});
            cases.push_back({{q, p, p}, gamma});
        }
    }
    return cases;
}

using BlockColoring = std::array<Color, 4>;

std::vector<BlockColoring> proper_block_colorings(const Block& b, const AnchorCase& ac)
{
    std::vector<BlockColoring> out;
    for (unsigned code = 0; code < 81; ++code) {
        BlockColoring col{};
        unsigned rest = code;
        for (std::size_t p = 0; p < 4; ++p) {
            col[p] = static_cast<Color>(rest % 3 + 1);
            rest /= 3;
        }
        const bool proper = std::none_of(b.constraints.begin(), b.constraints.end(), [&](const PairConstraint& c) {
            return col[c.p] == col[c.q] && col[c.p] == ac.colors[c.anchor];
        });
        if (proper)
            out.push_back(col);
    }
    return out;
}

std::string coloring_text(const BlockColoring& c)
{
    return std::to_string(c[0]) + std::to_string(c[1]) + std::to_string(c[2]) + std::to_string(c[3]);
}

std::size_t position_of(char c)
{
    switch (c) {
    case 's': return 0;
    case 't': return 1;
    case 'u': return 2;
    case 'v': return 3;
    default: return 4;
    }
}

std::uint64_t triple_key(Vertex a, Vertex b, Vertex c)
{
    std::array<std::uint64_t, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return (t[0] << 42) | (t[1] << 21) | t[2];
}

} // namespace

Report verify_g1_dichotomy(const Hypergraph& g, const GadgetCertificate& cert)
{
    Report report;
    const std::size_t n = g.num_vertices();

    // Locate the blocks.
    std::vector<Block> blocks;
    std::array<std::size_t, 4> hubs{kNoBlock, kNoBlock, kNoBlock, kNoBlock};
    std::map<std::string, TupleBlocks> tuples;
    std::vector<std::string> problems;
    const auto block_slot = [&](std::size_t& slot, std::string name) -> Block& {
        if (slot == kNoBlock) {
            slot = blocks.size();
            blocks.push_back({std::move(name), {}, {}});
        }
        return blocks[slot];
    };
    if (cert.provenance.size() != n + 1)
        problems.push_back("provenance has " + std::to_string(cert.provenance.size()) + " slots for "
                           + std::to_string(n) + " vertices");
    for (Vertex v = 1; v < cert.provenance.size() && v <= n; ++v) {
        const std::string& role = cert.provenance[v];
        std::string local = role;
        TupleBlocks* tuple = nullptr;
        std::string tuple_name;
        if (role.rfind("T=", 0) == 0) {
            const auto colon = role.find(':');
            if (colon != 6)
                continue;
            tuple_name = role.substr(2, 4);
            if (std::any_of(tuple_name.begin(), tuple_name.end(), [](char c) { return position_of(c) > 3; }))
                continue;
            tuple = &tuples[tuple_name];
            local = role.substr(colon + 1);
        }
        // local is H<i>.<pos> or H0.r<j>
        if (local.size() < 4 || local[0] != 'H' || local[2] != '.')
            continue;
        const std::size_t i = static_cast<std::size_t>(local[1] - '0');
        std::size_t pos = 4;
        if (i == 0 && local.size() == 5 && local[3] == 'r' && local[4] >= '1' && local[4] <= '4')
            pos = static_cast<std::size_t>(local[4] - '1');
        else if (i >= 1 && i <= 4 && local.size() == 4)
            pos = position_of(local[3]);
        if (pos > 3 || (i == 0 && !tuple))
            continue;
        Block& b = tuple ? block_slot(tuple->block[i], "T=" + tuple_name + " H" + std::to_string(i))
                         : block_slot(hubs[i - 1], "H" + std::to_string(i));
        b.vertices[pos] = v;
    }
    for (std::size_t i = 0; i < 4; ++i)
        if (hubs[i] == kNoBlock)
            problems.push_back("hub block H" + std::to_string(i + 1) + " missing");
    for (const Block& b : blocks)
        if (std::find(b.vertices.begin(), b.vertices.end(), Vertex{0}) != b.vertices.end())
            problems.push_back("block " + b.name + " incomplete");
    for (const auto& [name, t] : tuples)
        if (std::find(t.block.begin(), t.block.end(), kNoBlock) != t.block.end())
            problems.push_back("tuple " + name + " lacks a block");

    const bool anchors_ok =
        std::all_of(cert.anchors.begin(), cert.anchors.end(), [&](Vertex a) { return a >= 1 && a <= n; });
    if (!anchors_ok)
        problems.push_back("anchor out of range");

    const bool uniform = is_k_uniform(g, 3);
    const bool linear = is_linear(g);
    std::string structure_detail = std::string(uniform ? "" : "not 3-uniform; ") + (linear ? "" : "not linear; ");
    for (const std::string& p : problems)
        structure_detail += p + "; ";
    const bool structure_ok = uniform && linear && problems.empty();
    report.add("structure", structure_ok, structure_ok ? std::to_string(blocks.size()) + " blocks" : structure_detail);
    if (!structure_ok) {
        report.notes.push_back("block layout unusable; local subchecks skipped");
        return report;
    }

    // Pair constraints from edges made of two block vertices and an anchor.
    std::vector<std::size_t> block_of(n + 1, kNoBlock);
    std::vector<std::uint8_t> pos_of(n + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::uint8_t p = 0; p < 4; ++p) {
            block_of[blocks[b].vertices[p]] = b;
            pos_of[blocks[b].vertices[p]] = p;
        }
    std::vector<int> anchor_index(n + 1, -1);
    for (int k = 0; k < 3; ++k)
        anchor_index[cert.anchors[static_cast<std::size_t>(k)]] = k;
    std::unordered_set<std::uint64_t> triples;
    for (const Edge& e : g.edges()) {
        triples.insert(triple_key(e[0], e[1], e[2]));
        for (std::size_t k = 0; k < 3; ++k) {
            const Vertex p = e[(k + 1) % 3];
            const Vertex q = e[(k + 2) % 3];
            const Vertex third = e[k];
            if (anchor_index[third] < 0 || block_of[p] == kNoBlock || block_of[p] != block_of[q])
                continue;
            blocks[block_of[p]].constraints.push_back(
                {pos_of[p], pos_of[q], static_cast<std::uint8_t>(anchor_index[third])});
        }
    }

    const auto cases = two_equal_cases();
    std::string k4_fail;
    std::string block_fail;
    std::string clash_fail;
    std::size_t colorings_checked = 0;

    for (const AnchorCase& ac : cases) {
        std::vector<std::vector<BlockColoring>> proper(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            proper[b] = proper_block_colorings(blocks[b], ac);
            colorings_checked += 81;
            for (const BlockColoring& col : proper[b]) {
                if (std::find(col.begin(), col.end(), ac.gamma) != col.end())
                    continue;
                const bool is_hub = std::find(hubs.begin(), hubs.end(), b) != hubs.end();
                std::string& slot = is_hub ? k4_fail : block_fail;
                if (slot.empty())
                    slot = "block " + blocks[b].name + ", " + ac.text() + ": coloring " + coloring_text(col)
                           + " avoids color " + std::to_string(ac.gamma);
                break;
            }
        }

        for (const auto& [name, t] : tuples) {
            if (!clash_fail.empty())
                break;
            std::array<Vertex, 4> label{};
            for (std::size_t p = 0; p < 4; ++p)
                label[p] = blocks[hubs[p]].vertices[position_of(name[p])];
            const Block& h0 = blocks[t.block[0]];

            std::array<bool, 4> ok{};
            for (std::size_t j = 0; j < 4; ++j) {
                const Block& hj = blocks[t.block[j + 1]];
                const Vertex rj = h0.vertices[j];
                ok[j] = std::all_of(proper[t.block[j + 1]].begin(), proper[t.block[j + 1]].end(),
                                    [&](const BlockColoring& col) {
                                        for (std::size_t p = 0; p < 4; ++p)
                                            if (col[p] == ac.gamma
                                                && triples.count(triple_key(hj.vertices[p], rj, label[p])))
                                                return true;
                                        return false;
                                    });
            }
            for (const BlockColoring& col : proper[t.block[0]]) {
                bool forced = false;
                for (std::size_t j = 0; j < 4; ++j)
                    forced = forced || (col[j] == ac.gamma && ok[j]);
                if (!forced) {
                    clash_fail = "tuple " + name + ", " + ac.text() + ": H0 coloring " + coloring_text(col)
                                 + " reaches no clash";
                    break;
                }
            }
        }
    }

    report.add("local-k4", k4_fail.empty(), k4_fail.empty() ? "4 hub blocks x 18 anchor cases" : k4_fail);
    report.add("local-block", block_fail.empty(),
               block_fail.empty() ? std::to_string(blocks.size() - 4) + " tuple blocks x 18 anchor cases" : block_fail);
    report.add("clash", clash_fail.empty(),
               clash_fail.empty() ? std::to_string(tuples.size()) + " tuples x 18 anchor cases" : clash_fail);

    std::size_t covered = 0;
    std::string absent;
    for (std::size_t code = 0; code < 256; ++code) {
        std::string name;
        for (std::size_t k = 0; k < 4; ++k)
            name += "stuv"[(code >> (2 * (3 - k))) & 3U];
        if (tuples.count(name))
            ++covered;
        else if (absent.empty())
            absent = name;
    }
    report.add("tuples", covered == 256,
               std::to_string(covered) + "/256 hub tuples" + (absent.empty() ? "" : ", missing " + absent));

    const PartialColoring& w = cert.witness;
    bool witness_ok = w.num_vertices() == n && w.r() <= 3 && validate_coloring(g, w);
    if (witness_ok) {
        const Color ca = w.color(cert.anchors[0]);
        const Color cb = w.color(cert.anchors[1]);
        const Color cc = w.color(cert.anchors[2]);
        witness_ok = ca != cb && cb != cc && ca != cc;
    }
    report.add("witness", witness_ok, "3-coloring with distinct anchor colors");

    report.notes.push_back(std::to_string(colorings_checked) + " block colorings enumerated");
    report.notes.push_back("dichotomy certified by local subchecks; no global search over colorings");
    return report;
}

Report verify_reduction(const ReductionOutput& r, const Hypergraph& gstar, const PartialColoring* coloring,
                        const OracleLimits& limits)
{
    Report report;
    const Hypergraph& g = r.hypergraph;
    const std::size_t n_star = gstar.num_vertices();
    const std::size_t m_star = gstar.num_edges();

    report.add("linear", is_linear(g), "");
    report.add("uniform", is_k_uniform(g, 3), "3-uniform");

    const std::vector<Vertex>& x = r.hitting_set;
    const bool x_in_range = std::all_of(x.begin(), x.end(), [&](Vertex v) { return v >= 1 && v <= g.num_vertices(); });
    const std::size_t missing = x_in_range ? edges_missing(g, x) : g.num_edges();
    report.add("hitting-set", x.size() <= 532 && missing == 0,
               "|X| = " + std::to_string(x.size()) + ", " + std::to_string(missing) + " edges avoid X");

    const std::size_t want_v = reduction_vertex_count(n_star, m_star);
    const std::size_t want_e = reduction_edge_count(m_star);
    bool increments = g.num_vertices() == want_v && g.num_edges() == want_e && r.edge_blocks.size() == m_star;
    std::string inc_detail = std::to_string(g.num_vertices()) + " vertices (expected " + std::to_string(want_v) + "), "
                             + std::to_string(g.num_edges()) + " edges (expected " + std::to_string(want_e) + ")";
    if (increments) {
        const std::size_t block_start = want_v - reduction_layout::kBlockVertices * m_star;
        std::vector<char> seen(g.num_vertices() + 1, 0);
        for (std::size_t bi = 0; bi < r.edge_blocks.size() && increments; ++bi) {
            const EdgeBlock& b = r.edge_blocks[bi];
            std::vector<std::size_t> touched;
            std::size_t fresh = 0;
            for (const auto& q : b.blocks) {
                for (Vertex v : q) {
                    if (v <= block_start || v > g.num_vertices() || seen[v])
                        continue;
                    seen[v] = 1;
                    ++fresh;
                    for (std::size_t i : g.incident(v))
                        touched.push_back(i);
                }
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            if (fresh != reduction_layout::kBlockVertices || touched.size() != reduction_layout::kBlockEdges) {
                increments = false;
                inc_detail = "input edge " + std::to_string(b.x) + "-" + std::to_string(b.y) + " adds "
                             + std::to_string(fresh) + " vertices and " + std::to_string(touched.size()) + " edges";
            }
        }
        if (increments)
            inc_detail = std::to_string(m_star) + " input edges, 12 vertices and 30 edges each";
    }
    report.add("increments", increments, inc_detail);

    const bool colors_ok = r.edge_coloring.size() == m_star && is_proper_edge_coloring(gstar, r.edge_coloring)
                           && std::all_of(r.edge_coloring.begin(), r.edge_coloring.end(), [](Color c) { return c <= 5; });
    const Color used =
        r.edge_coloring.empty() ? 0 : *std::max_element(r.edge_coloring.begin(), r.edge_coloring.end());
    report.add("edge-coloring", colors_ok, "largest color " + std::to_string(used));

    const bool prov_ok = r.provenance.size() == g.num_vertices() + 1
                         && std::all_of(r.provenance.begin() + 1, r.provenance.end(),
                                        [](const std::string& s) { return !s.empty(); });
    report.add("provenance", prov_ok, std::to_string(r.provenance.empty() ? 0 : r.provenance.size() - 1) + " roles");

    bool rebuilt_ok = false;
    std::string rebuilt_detail;
    try {
        const ReductionOutput fresh = reduce_3col_linear(gstar);
        rebuilt_ok = r.source == gstar && fresh.hypergraph == g && fresh.edge_coloring == r.edge_coloring
                     && fresh.hitting_set == r.hitting_set;
        if (!rebuilt_ok)
            rebuilt_detail = "output differs from a fresh construction";
    } catch (const PreconditionError& e) {
        rebuilt_detail = e.what();
    }
    report.add("matches-construction", rebuilt_ok, rebuilt_detail);

    std::optional<PartialColoring> c;
    if (coloring) {
        c = *coloring;
    } else {
        try {
            c = brute_force_color(gstar, 3, limits);
            if (!c)
                report.notes.push_back("input graph is not 3-colorable; no lift attempted");
        } catch (const CapExceeded&) {
            report.notes.push_back("input graph too large for brute force; no lift attempted");
        }
    }
    if (c) {
        bool lift_ok = false;
        std::string detail;
        try {
            const PartialColoring d = lift_3coloring(r, *c);
            lift_ok = validate_coloring(g, d);
            if (!lift_ok) {
                const auto bad = first_monochromatic_edge(g, d);
                detail = bad ? "monochromatic " + first_edge_text(g, *bad) : "lifted coloring is partial";
            }
        } catch (const std::exception& e) {
            detail = e.what();
        }
        report.add("lift", lift_ok, detail);
    }
    report.notes.push_back("converse direction (output 3-colorable implies input 3-colorable) rests on the "
                           "gadget subchecks, not on a global search");
    return report;
}

} // namespace hypercol
