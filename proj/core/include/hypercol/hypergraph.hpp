#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <vector>

namespace hypercol {

/// Vertices are 1-based everywhere: in files, in the API and in containers
/// that are indexed by vertex (slot 0 is unused).
using Vertex = std::uint32_t;

/// Strictly increasing list of vertices.
using Edge = std::vector<Vertex>;

using Color = std::uint32_t;
inline constexpr Color kUncolored = 0;

/// Exact nonnegative vertex weight.
using Weight = boost::rational<std::int64_t>;

/// Immutable hypergraph on vertices 1..n. Edge order is preserved from
/// construction; every first-fit rule in the library follows it.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Sorts each edge. Throws PreconditionError on an empty edge, a vertex
    /// outside 1..n, a repeated vertex inside an edge or two equal edges.
    explicit Hypergraph(std::size_t n, std::vector<Edge> edges = {});

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    /// Indices of the edges containing v, ascending.
    std::span<const std::size_t> incident(Vertex v) const
    {
        return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    /// 0 for an edgeless hypergraph.
    std::size_t max_edge_size() const noexcept { return max_edge_size_; }

    auto vertices() const { return std::views::iota(Vertex{1}, static_cast<Vertex>(n_ + 1)); }

    /// Same vertex count and same edge list (order included).
    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_ = {0, 0};
    std::vector<std::size_t> incidence_;
    std::size_t max_edge_size_ = 0;
};

class WeightedHypergraph {
public:
    WeightedHypergraph() = default;

    /// Every vertex gets weight 1.
    explicit WeightedHypergraph(Hypergraph base);

    /// `weights[v - 1]` is the weight of v. Throws PreconditionError on a
    /// length mismatch or a negative weight.
    WeightedHypergraph(Hypergraph base, std::vector<Weight> weights);

    const Hypergraph& base() const noexcept { return base_; }
    const std::vector<Weight>& weights() const noexcept { return weights_; }
    const Weight& weight(Vertex v) const { return weights_[v - 1]; }

    Weight total_weight() const;
    Weight weight_of(std::span<const Vertex> set) const;

    friend bool operator==(const WeightedHypergraph&, const WeightedHypergraph&) = default;

private:
    Hypergraph base_;
    std::vector<Weight> weights_;
};

/// A set of edge indices into some Hypergraph. Disjointness is checked by
/// is_matching(), not by construction.
struct Matching {
    std::vector<std::size_t> edges;

    std::size_t size() const noexcept { return edges.size(); }
    bool empty() const noexcept { return edges.empty(); }

    /// Sorted union of the matched edges.
    std::vector<Vertex> covered_vertices(const Hypergraph& g) const;

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// Colors in 1..r on a subset X of the vertices (X = the colored vertices).
/// Whether it is a *partial r-coloring* of a particular hypergraph is a
/// property checked by is_partial_coloring().
class PartialColoring {
public:
    PartialColoring() = default;
    PartialColoring(std::size_t n, Color r)
        : r_(r)
        , colors_(n + 1, kUncolored)
    {}

    Color r() const noexcept { return r_; }
    std::size_t num_vertices() const noexcept { return colors_.size() - 1; }

    Color color(Vertex v) const { return colors_[v]; }
    bool is_colored(Vertex v) const { return colors_[v] != kUncolored; }

    /// Throws PreconditionError if c is outside 1..r or v outside 1..n.
    void assign(Vertex v, Color c);
    void unassign(Vertex v) { colors_[v] = kUncolored; }

    std::vector<Vertex> domain() const;
    std::size_t domain_size() const;
    bool is_total() const { return domain_size() == num_vertices(); }

    /// Vertices with color c, ascending.
    std::vector<Vertex> color_class(Color c) const;

    /// Raw per-vertex colors, slot 0 unused.
    std::span<const Color> raw() const noexcept { return colors_; }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    Color r_ = 0;
    std::vector<Color> colors_ = {kUncolored};
};

} // namespace hypercol
