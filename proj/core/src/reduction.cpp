#include "hypercol/reduction.hpp"

#include "hypercol/edge_coloring.hpp"
#include "hypercol/error.hpp"
#include "hypercol/structure.hpp"

#include <algorithm>
#include <string>

namespace hypercol {

using namespace reduction_layout;

std::size_t reduction_vertex_count(std::size_t n, std::size_t m)
{
    return kAnchorCount + kCopies * (g1_layout::kVertices - 3) + n + kBlockVertices * m;
}

std::size_t reduction_edge_count(std::size_t m)
{
    return (g1_layout::kEdges + 1) + (kCopies - 1) * g1_layout::kEdges + kBlockEdges * m;
}

namespace {

// Superscripts are read modulo 3 within 1..3.
std::size_t wrap3(std::size_t i)
{
    return (i - 1) % 3 + 1;
}

std::string anchor_name(std::size_t j, std::size_t i)
{
    return "anchor.a" + std::to_string(j) + "^" + std::to_string(i);
}

void check_input(const Hypergraph& gstar)
{
    for (const Edge& e : gstar.edges())
        if (e.size() != 2)
            throw PreconditionError("reduction input must be a simple graph (every edge of size 2)");
    for (Vertex v : gstar.vertices())
        if (gstar.degree(v) > 4)
            throw PreconditionError("reduction input has vertex " + std::to_string(v) + " of degree "
                                    + std::to_string(gstar.degree(v)) + " > 4");
}

} // namespace

ReductionOutput reduce_3col_linear(const Hypergraph& gstar)
{
    check_input(gstar);

    ReductionOutput out;
    out.source = gstar;
    out.edge_coloring = misra_gries_edge_color(gstar);
    if (!out.edge_coloring.empty() && *std::max_element(out.edge_coloring.begin(), out.edge_coloring.end()) > 5)
        throw std::logic_error("edge coloring of a degree-4 graph used more than 5 colors");

    const Gadget g1 = build_g1();
    const Gadget g2 = build_g2();
    out.g1 = g1.certificate;
    out.g2 = g2.certificate;

    const std::size_t n_out = reduction_vertex_count(gstar.num_vertices(), gstar.num_edges());
    out.provenance.assign(n_out + 1, {});
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= kAnchorRows; ++j)
            out.provenance[anchor(j, i)] = anchor_name(j, i);

    std::vector<Edge> edges;
    edges.reserve(reduction_edge_count(gstar.num_edges()));
    Vertex next = static_cast<Vertex>(kAnchorCount + 1);

    const auto attach = [&](const Gadget& gadget, std::size_t index, std::size_t side, std::array<Vertex, 3> anchors) {
        GadgetCopy copy;
        copy.index = index;
        copy.side = side;
        copy.kind = gadget.certificate.kind;
        const std::size_t n = gadget.hypergraph.num_vertices();
        copy.vertex_map.assign(n + 1, 0);
        for (std::size_t k = 0; k < 3; ++k)
            copy.vertex_map[gadget.certificate.anchors[k]] = anchors[k];
        const std::string prefix = copy.kind == GadgetKind::G2
                                       ? std::string("G2:")
                                       : "G1[" + std::to_string(index) + "," + std::to_string(side) + "]:";
        for (Vertex v = 1; v <= n; ++v) {
            if (copy.vertex_map[v] != 0)
                continue;
            copy.vertex_map[v] = next;
            out.provenance[next] = prefix + gadget.certificate.provenance[v];
            ++next;
        }
        for (const Edge& e : gadget.hypergraph.edges()) {
            Edge mapped;
            for (Vertex v : e)
                mapped.push_back(copy.vertex_map[v]);
            edges.push_back(std::move(mapped));
        }
        for (Vertex z : gadget.certificate.hitting_set)
            out.hitting_set.push_back(copy.vertex_map[z]);
        out.gadgets.push_back(std::move(copy));
    };

    attach(g2, 1, 0, {anchor(1, 1), anchor(1, 2), anchor(1, 3)});
    for (std::size_t i = 2; i <= kAnchorRows; ++i) {
        attach(g1, i, 1, {anchor(i, 1), anchor(1, 2), anchor(1, 3)});
        attach(g1, i, 2, {anchor(1, 1), anchor(i, 2), anchor(1, 3)});
        attach(g1, i, 3, {anchor(1, 1), anchor(1, 2), anchor(i, 3)});
    }

    out.source_vertex.assign(gstar.num_vertices() + 1, 0);
    for (Vertex x : gstar.vertices()) {
        out.source_vertex[x] = next;
        out.provenance[next] = "graph.v" + std::to_string(x);
        ++next;
    }

    constexpr char kPos[] = "stuv";
    for (std::size_t ei = 0; ei < gstar.num_edges(); ++ei) {
        EdgeBlock block;
        block.x = gstar.edge(ei)[0];
        block.y = gstar.edge(ei)[1];
        block.color = out.edge_coloring[ei];
        block.first_edge = edges.size();
        const Vertex x = out.source_vertex[block.x];
        const Vertex y = out.source_vertex[block.y];
        const std::size_t odd = 2 * block.color - 1;
        const std::size_t even = 2 * block.color;
        const std::string prefix = "edge." + std::to_string(block.x) + "-" + std::to_string(block.y) + ".H";
        for (std::size_t i = 1; i <= 3; ++i) {
            auto& q = block.blocks[i - 1];
            for (std::size_t p = 0; p < 4; ++p) {
                q[p] = next;
                out.provenance[next] = prefix + std::to_string(i) + "." + kPos[p];
                ++next;
            }
            const auto [s, t, u, v] = q;
            const std::size_t up1 = wrap3(i + 1);
            const std::size_t up2 = wrap3(i + 2);
            edges.push_back({s, t, anchor(odd, up1)});
            edges.push_back({s, u, anchor(odd, up2)});
            edges.push_back({t, v, anchor(odd, up2)});
            edges.push_back({u, v, anchor(even, up1)});
            edges.push_back({s, v, anchor(even, up2)});
            edges.push_back({t, u, anchor(even, up2)});
            edges.push_back({x, s, anchor(odd, i)});
            edges.push_back({y, t, anchor(odd, i)});
            edges.push_back({x, u, anchor(even, i)});
            edges.push_back({y, v, anchor(even, i)});
        }
        out.edge_blocks.push_back(block);
    }

    if (next != n_out + 1)
        throw std::logic_error("reduction vertex numbering disagrees with the expected count");
    out.hypergraph = Hypergraph(n_out, std::move(edges));
    if (out.hypergraph.num_edges() != reduction_edge_count(gstar.num_edges()))
        throw std::logic_error("reduction edge count disagrees with the expected count");

    std::sort(out.hitting_set.begin(), out.hitting_set.end());
    out.hitting_set.erase(std::unique(out.hitting_set.begin(), out.hitting_set.end()), out.hitting_set.end());
    return out;
}

PartialColoring lift_3coloring(const ReductionOutput& r, const PartialColoring& c)
{
    const Hypergraph& gstar = r.source;
    if (c.num_vertices() != gstar.num_vertices() || c.r() > 3 || !validate_coloring(gstar, c))
        throw PreconditionError("lift needs a proper 3-coloring of the input graph");

    PartialColoring d(r.hypergraph.num_vertices(), 3);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= kAnchorRows; ++j)
            d.assign(anchor(j, i), static_cast<Color>(i));

    for (const GadgetCopy& copy : r.gadgets) {
        const GadgetCertificate& cert = copy.kind == GadgetKind::G2 ? r.g2 : r.g1;
        // Rename witness colors so the witness anchors land on the actual anchor colors.
        std::array<Color, 4> rename{};
        for (Vertex a : cert.anchors)
            rename[cert.witness.color(a)] = d.color(copy.vertex_map[a]);
        for (Vertex v = 1; v < copy.vertex_map.size(); ++v)
            if (!d.is_colored(copy.vertex_map[v]))
                d.assign(copy.vertex_map[v], rename[cert.witness.color(v)]);
    }

    for (Vertex x : gstar.vertices())
        d.assign(r.source_vertex[x], c.color(x));

    for (const EdgeBlock& block : r.edge_blocks) {
        for (Color i = 1; i <= 3; ++i) {
            const Color next = static_cast<Color>(wrap3(i + 1));
            const bool x_free = c.color(block.x) != i;
            const Color su = x_free ? i : next;
            const Color tv = x_free ? next : i;
            const auto& q = block.blocks[i - 1];
            d.assign(q[0], su);
            d.assign(q[2], su);
            d.assign(q[1], tv);
            d.assign(q[3], tv);
        }
    }
    return d;
}

} // namespace hypercol
