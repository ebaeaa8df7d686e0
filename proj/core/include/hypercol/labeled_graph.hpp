#pragma once

#include "hypercol/hypergraph.hpp"

#include <functional>
#include <vector>

namespace hypercol {

/// A 2-edge {u, v} (u < v) carrying a third vertex, its label.
struct LabeledEdge {
    Vertex u = 0;
    Vertex v = 0;
    Vertex label = 0;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Compact form of a linear 3-uniform hypergraph: each hyperedge {u, v, l}
/// is stored as the pair uv labeled l.
class LabeledGraph {
public:
    LabeledGraph() = default;

    /// Normalizes u < v. Throws PreconditionError on out-of-range vertices,
    /// u == v, a label inside its own edge or a repeated pair.
    LabeledGraph(std::size_t n, std::vector<LabeledEdge> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    const std::vector<LabeledEdge>& edges() const noexcept { return edges_; }

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<LabeledEdge> edges_;
};

/// {u, v, label} per labeled edge, in order. Throws PreconditionError when
/// the result is not linear.
Hypergraph labeled_to_hypergraph(const LabeledGraph& lg);

/// `pick(i)` names the vertex of edge i that becomes the label. Throws
/// PreconditionError unless g is linear and 3-uniform and every pick lies in
/// its edge.
LabeledGraph hypergraph_to_labeled(const Hypergraph& g, const std::function<Vertex(std::size_t)>& pick);

} // namespace hypercol
