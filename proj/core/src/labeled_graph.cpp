#include "hypercol/labeled_graph.hpp"

#include "hypercol/error.hpp"
#include "hypercol/structure.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

namespace hypercol {

LabeledGraph::LabeledGraph(std::size_t n, std::vector<LabeledEdge> edges)
    : n_(n)
    , edges_(std::move(edges))
{
    std::unordered_set<std::uint64_t> seen;
    for (LabeledEdge& e : edges_) {
        if (e.u > e.v)
            std::swap(e.u, e.v);
        const std::string where = "labeled edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
        if (e.u < 1 || e.v > n_ || e.label < 1 || e.label > n_)
            throw PreconditionError(where + " has a vertex outside 1.." + std::to_string(n_));
        if (e.u == e.v)
            throw PreconditionError(where + " is a loop");
        if (e.label == e.u || e.label == e.v)
            throw PreconditionError(where + " is labeled by one of its own ends");
        if (!seen.insert((std::uint64_t{e.u} << 32) | e.v).second)
            throw PreconditionError(where + " appears twice");
    }
}

Hypergraph labeled_to_hypergraph(const LabeledGraph& lg)
{
    std::vector<Edge> edges;
    edges.reserve(lg.edges().size());
    for (const LabeledEdge& e : lg.edges())
        edges.push_back({e.u, e.v, e.label});
    Hypergraph g(lg.num_vertices(), std::move(edges));
    if (!is_linear(g))
        throw PreconditionError("labeled graph does not describe a linear hypergraph");
    return g;
}

LabeledGraph hypergraph_to_labeled(const Hypergraph& g, const std::function<Vertex(std::size_t)>& pick)
{
    if (!is_k_uniform(g, 3))
        throw PreconditionError("labeled representation needs a 3-uniform hypergraph");
    if (!is_linear(g))
        throw PreconditionError("labeled representation needs a linear hypergraph");
    std::vector<LabeledEdge> out;
    out.reserve(g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        const Vertex label = pick(i);
        if (std::find(e.begin(), e.end(), label) == e.end())
            throw PreconditionError("picked label of edge " + std::to_string(i) + " is not in the edge");
        LabeledEdge le{0, 0, label};
        for (Vertex v : e) {
            if (v == label)
                continue;
            (le.u == 0 ? le.u : le.v) = v;
        }
        out.push_back(le);
    }
    return LabeledGraph(g.num_vertices(), std::move(out));
}

} // namespace hypercol
