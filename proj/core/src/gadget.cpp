#include "hypercol/gadget.hpp"

#include "hypercol/structure.hpp"

#include <stdexcept>

namespace hypercol {

const char* to_string(GadgetKind kind)
{
    return kind == GadgetKind::G1 ? "G1" : "G2";
}

namespace {

using namespace g1_layout;

constexpr Vertex kA = 1;
constexpr Vertex kB = 2;
constexpr Vertex kC = 3;
constexpr char kPos[] = "stuv";

// K_4 on (s, t, u, v) with st = uv = a, su = tv = b, sv = tu = c.
void add_k4(std::vector<LabeledEdge>& out, const std::array<Vertex, 4>& q)
{
    out.push_back({q[0], q[1], kA});
    out.push_back({q[2], q[3], kA});
    out.push_back({q[0], q[2], kB});
    out.push_back({q[1], q[3], kB});
    out.push_back({q[0], q[3], kC});
    out.push_back({q[1], q[2], kC});
}

std::array<std::size_t, 4> tuple_positions(std::size_t tau)
{
    return {tau / 64, (tau / 16) % 4, (tau / 4) % 4, tau % 4};
}

std::string tuple_name(std::size_t tau)
{
    std::string name;
    for (std::size_t p : tuple_positions(tau))
        name += kPos[p];
    return name;
}

} // namespace

Gadget build_g1()
{
    std::vector<LabeledEdge> edges;
    edges.reserve(kEdges);
    std::vector<std::string> prov(kVertices + 1);
    prov[kA] = "anchor.a";
    prov[kB] = "anchor.b";
    prov[kC] = "anchor.c";

    for (std::size_t i = 1; i <= 4; ++i) {
        std::array<Vertex, 4> q{};
        for (std::size_t p = 0; p < 4; ++p) {
            q[p] = hub(i, p);
            prov[q[p]] = "H" + std::to_string(i) + "." + kPos[p];
        }
        add_k4(edges, q);
    }

    for (std::size_t tau = 0; tau < kTuples; ++tau) {
        const auto t = tuple_positions(tau);
        const std::string prefix = "T=" + tuple_name(tau) + ":";
        const std::array<Vertex, 4> r{root(tau, 1), root(tau, 2), root(tau, 3), root(tau, 4)};
        for (std::size_t j = 0; j < 4; ++j)
            prov[r[j]] = prefix + "H0.r" + std::to_string(j + 1);
        add_k4(edges, r);
        for (std::size_t i = 1; i <= 4; ++i) {
            std::array<Vertex, 4> q{};
            for (std::size_t p = 0; p < 4; ++p) {
                q[p] = tuple_block(tau, i, p);
                prov[q[p]] = prefix + "H" + std::to_string(i) + "." + kPos[p];
            }
            add_k4(edges, q);
        }
        // The p-th vertex of H_i^T meets r_i under the label T[p].
        for (std::size_t i = 1; i <= 4; ++i)
            for (std::size_t p = 0; p < 4; ++p)
                edges.push_back({tuple_block(tau, i, p), r[i - 1], hub(p + 1, t[p])});
    }

    Gadget g;
    g.labeled = LabeledGraph(kVertices, std::move(edges));
    g.hypergraph = labeled_to_hypergraph(g.labeled);

    GadgetCertificate& cert = g.certificate;
    cert.kind = GadgetKind::G1;
    cert.anchors = {kA, kB, kC};
    for (Vertex v = 1; v <= kAnchors + kHubVertices; ++v)
        cert.hitting_set.push_back(v);
    cert.provenance = std::move(prov);

    PartialColoring& f = cert.witness;
    f = PartialColoring(kVertices, 3);
    f.assign(kA, 1);
    f.assign(kB, 2);
    f.assign(kC, 3);
    for (std::size_t i = 1; i <= 4; ++i) {
        f.assign(hub(i, 0), 2);
        f.assign(hub(i, 1), 2);
        f.assign(hub(i, 2), 3);
        f.assign(hub(i, 3), 3);
    }
    for (std::size_t tau = 0; tau < kTuples; ++tau) {
        f.assign(root(tau, 1), 1);
        f.assign(root(tau, 2), 2);
        f.assign(root(tau, 3), 2);
        f.assign(root(tau, 4), 1);
        for (std::size_t i = 1; i <= 4; ++i) {
            f.assign(tuple_block(tau, i, 0), 1);
            f.assign(tuple_block(tau, i, 1), 3);
            f.assign(tuple_block(tau, i, 2), 1);
            f.assign(tuple_block(tau, i, 3), 3);
        }
    }

    if (g.hypergraph.num_vertices() != kVertices || g.hypergraph.num_edges() != kEdges)
        throw std::logic_error("G1 builder counts disagree with the layout");
    return g;
}

Gadget build_g2()
{
    Gadget g = build_g1();
    std::vector<LabeledEdge> edges = g.labeled.edges();
    edges.push_back({kA, kB, kC});
    g.labeled = LabeledGraph(kVertices, std::move(edges));
    g.hypergraph = labeled_to_hypergraph(g.labeled);
    g.certificate.kind = GadgetKind::G2;
    return g;
}

} // namespace hypercol
