#include "hypercol/structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace hypercol {

bool is_k_uniform(const Hypergraph& g, std::size_t k)
{
    return std::all_of(g.edges().begin(), g.edges().end(), [k](const Edge& e) { return e.size() == k; });
}

bool is_k_bounded(const Hypergraph& g, std::size_t k)
{
    return g.max_edge_size() <= k;
}

bool is_linear(const Hypergraph& g)
{
    // Two distinct edges share >= 2 vertices iff they share a vertex pair.
    std::unordered_set<std::uint64_t> pairs;
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                const std::uint64_t key = (std::uint64_t{e[i]} << 32) | e[j];
                if (!pairs.insert(key).second)
                    return false;
            }
        }
    }
    return true;
}

std::vector<char> vertex_mask(std::size_t n, std::span<const Vertex> set)
{
    std::vector<char> mask(n + 1, 0);
    for (Vertex v : set)
        if (v >= 1 && v <= n)
            mask[v] = 1;
    return mask;
}

std::vector<std::size_t> induced_edges(const Hypergraph& g, std::span<const Vertex> set)
{
    const auto mask = vertex_mask(g.num_vertices(), set);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return mask[v]; }))
            out.push_back(i);
    }
    return out;
}

bool is_stable(const Hypergraph& g, std::span<const Vertex> set)
{
    const auto mask = vertex_mask(g.num_vertices(), set);
    return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return std::all_of(e.begin(), e.end(), [&](Vertex v) { return mask[v]; });
    });
}

bool is_matching(const Hypergraph& g, const Matching& m)
{
    std::vector<char> used(g.num_vertices() + 1, 0);
    for (std::size_t i : m.edges) {
        if (i >= g.num_edges())
            return false;
        for (Vertex v : g.edge(i)) {
            if (used[v])
                return false;
            used[v] = 1;
        }
    }
    return true;
}

bool is_maximal_matching(const Hypergraph& g, const Matching& m)
{
    if (!is_matching(g, m))
        return false;
    const auto covered = vertex_mask(g.num_vertices(), m.covered_vertices(g));
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return std::any_of(e.begin(), e.end(), [&](Vertex v) { return covered[v]; });
    });
}

std::optional<std::size_t> first_monochromatic_edge(const Hypergraph& g, const PartialColoring& c)
{
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        const Color first = c.color(e.front());
        if (first == kUncolored)
            continue;
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return c.color(v) == first; }))
            return i;
    }
    return std::nullopt;
}

bool is_partial_coloring(const Hypergraph& g, const PartialColoring& c)
{
    if (c.num_vertices() != g.num_vertices())
        return false;
    for (Vertex v : g.vertices())
        if (c.color(v) > c.r())
            return false;
    return !first_monochromatic_edge(g, c).has_value();
}

bool validate_coloring(const Hypergraph& g, const PartialColoring& c)
{
    if (c.num_vertices() != g.num_vertices())
        return false;
    for (Vertex v : g.vertices())
        if (c.color(v) == kUncolored || c.color(v) > c.r())
            return false;
    return !first_monochromatic_edge(g, c).has_value();
}

} // namespace hypercol
