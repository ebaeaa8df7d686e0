#include "hypercol/hypergraph.hpp"

#include "hypercol/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hypercol {

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges)
    : n_(n)
    , edges_(std::move(edges))
{
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.empty())
            throw PreconditionError("edge " + std::to_string(i) + " is empty");
        std::sort(e.begin(), e.end());
        if (e.front() < 1 || e.back() > n_)
            throw PreconditionError("edge " + std::to_string(i) + " has a vertex outside 1.."
                                    + std::to_string(n_));
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw PreconditionError("edge " + std::to_string(i) + " repeats a vertex");
        max_edge_size_ = std::max(max_edge_size_, e.size());
    }

    std::vector<std::size_t> order(edges_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges_[order[i - 1]] == edges_[order[i]])
            throw PreconditionError("edges " + std::to_string(std::min(order[i - 1], order[i])) + " and "
                                    + std::to_string(std::max(order[i - 1], order[i])) + " are equal");
    }

    offsets_.assign(n_ + 2, 0);
    for (const Edge& e : edges_)
        for (Vertex v : e)
            ++offsets_[v + 1];
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    incidence_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i])
            incidence_[fill[v]++] = i;
}

WeightedHypergraph::WeightedHypergraph(Hypergraph base)
    : base_(std::move(base))
    , weights_(base_.num_vertices(), Weight(1))
{}

WeightedHypergraph::WeightedHypergraph(Hypergraph base, std::vector<Weight> weights)
    : base_(std::move(base))
    , weights_(std::move(weights))
{
    if (weights_.size() != base_.num_vertices())
        throw PreconditionError("weight vector has " + std::to_string(weights_.size())
                                + " entries for " + std::to_string(base_.num_vertices()) + " vertices");
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] < 0)
            throw PreconditionError("vertex " + std::to_string(i + 1) + " has a negative weight");
}

Weight WeightedHypergraph::total_weight() const
{
    return std::accumulate(weights_.begin(), weights_.end(), Weight(0));
}

Weight WeightedHypergraph::weight_of(std::span<const Vertex> set) const
{
    Weight w(0);
    for (Vertex v : set)
        w += weight(v);
    return w;
}

std::vector<Vertex> Matching::covered_vertices(const Hypergraph& g) const
{
    std::vector<Vertex> out;
    for (std::size_t i : edges)
        out.insert(out.end(), g.edge(i).begin(), g.edge(i).end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void PartialColoring::assign(Vertex v, Color c)
{
    if (v < 1 || v >= colors_.size())
        throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (c < 1 || c > r_)
        throw PreconditionError("color " + std::to_string(c) + " outside 1.." + std::to_string(r_));
    colors_[v] = c;
}

std::vector<Vertex> PartialColoring::domain() const
{
    std::vector<Vertex> out;
    for (Vertex v = 1; v < colors_.size(); ++v)
        if (colors_[v] != kUncolored)
            out.push_back(v);
    return out;
}

std::size_t PartialColoring::domain_size() const
{
    return static_cast<std::size_t>(
        std::count_if(colors_.begin() + 1, colors_.end(), [](Color c) { return c != kUncolored; }));
}

std::vector<Vertex> PartialColoring::color_class(Color c) const
{
    std::vector<Vertex> out;
    for (Vertex v = 1; v < colors_.size(); ++v)
        if (colors_[v] == c)
            out.push_back(v);
    return out;
}

} // namespace hypercol
