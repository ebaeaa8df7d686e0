#include "hypercol/constructions.hpp"

#include "hypercol/error.hpp"
#include "hypercol/structure.hpp"

#include <algorithm>
#include <string>

namespace hypercol {

Hypergraph ltimes(const Hypergraph& g, const Hypergraph& h)
{
    const auto shift = static_cast<Vertex>(g.num_vertices());
    std::vector<Edge> edges = g.edges();
    edges.reserve(g.num_edges() + h.num_edges() * g.num_vertices());
    for (const Edge& e : h.edges()) {
        for (Vertex x : g.vertices()) {
            Edge lifted{x};
            for (Vertex v : e)
                lifted.push_back(v + shift);
            edges.push_back(std::move(lifted));
        }
    }
    return Hypergraph(g.num_vertices() + h.num_vertices(), std::move(edges));
}

Hypergraph complete_uniform(std::size_t n, std::size_t k)
{
    std::vector<Edge> edges;
    if (k == 0 || k > n)
        return Hypergraph(n);
    Edge e(k);
    for (std::size_t i = 0; i < k; ++i)
        e[i] = static_cast<Vertex>(i + 1);
    for (;;) {
        edges.push_back(e);
        std::size_t i = k;
        while (i > 0 && e[i - 1] == n - k + i)
            --i;
        if (i == 0)
            break;
        ++e[i - 1];
        for (std::size_t j = i; j < k; ++j)
            e[j] = e[j - 1] + 1;
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph complete_graph(std::size_t r)
{
    return complete_uniform(r, 2);
}

Hypergraph uplift_bounded(const Hypergraph& h, std::size_t r)
{
    return ltimes(complete_graph(r), h);
}

Hypergraph uplift_uniform(const Hypergraph& h, std::size_t r, std::size_t k)
{
    if (r == 0 || k == 0)
        throw PreconditionError("uplift_uniform needs r >= 1 and k >= 1");
    if (!is_k_uniform(h, k))
        throw PreconditionError("uplift_uniform needs a " + std::to_string(k) + "-uniform hypergraph");
    return ltimes(complete_uniform((r - 1) * k + 1, k + 1), h);
}

PrecoloringInstance uplift_precoloring(const Hypergraph& h, std::size_t r)
{
    PrecoloringInstance out{ltimes(Hypergraph(r), h), {}};
    out.precoloring = PartialColoring(out.graph.num_vertices(), static_cast<Color>(r));
    for (std::size_t i = 1; i <= r; ++i)
        out.precoloring.assign(static_cast<Vertex>(i), static_cast<Color>(i));
    return out;
}

WeightedHypergraph mwss_gadget(const WeightedHypergraph& g)
{
    const Hypergraph& base = g.base();
    const auto v = static_cast<Vertex>(base.num_vertices() + 1);
    std::vector<Edge> edges;
    edges.reserve(base.num_edges());
    for (const Edge& e : base.edges()) {
        Edge grown = e;
        grown.push_back(v);
        edges.push_back(std::move(grown));
    }
    std::vector<Weight> weights = g.weights();
    weights.push_back(g.total_weight() + 1);
    return WeightedHypergraph(Hypergraph(v, std::move(edges)), std::move(weights));
}

} // namespace hypercol
