#pragma once

#include "hypercol/hypergraph.hpp"

#include <cstddef>

namespace hypercol {

/// G ⋉ H. H is relabeled to n_G + 1 .. n_G + n_H. Edges: E(G) in order,
/// then for each edge e of H (in order) and each x of G ascending, e ∪ {x}.
Hypergraph ltimes(const Hypergraph& g, const Hypergraph& h);

/// K_r as a 2-uniform hypergraph, edges in lexicographic order.
Hypergraph complete_graph(std::size_t r);

/// Complete k-uniform hypergraph on n vertices, edges in lexicographic order.
Hypergraph complete_uniform(std::size_t n, std::size_t k);

/// K_r ⋉ H: (k+1)-bounded when H is k-bounded, r-colorable iff H is.
Hypergraph uplift_bounded(const Hypergraph& h, std::size_t r);

/// (complete (k+1)-uniform hypergraph on (r-1)k + 1 vertices) ⋉ H.
/// Throws PreconditionError unless H is k-uniform.
Hypergraph uplift_uniform(const Hypergraph& h, std::size_t r, std::size_t k);

struct PrecoloringInstance {
    Hypergraph graph;
    PartialColoring precoloring;
};

/// (r isolated vertices) ⋉ H with vertex i precolored i. The precoloring
/// extends iff H is r-colorable.
PrecoloringInstance uplift_precoloring(const Hypergraph& h, std::size_t r);

/// Adds a vertex v = n + 1 to every edge, with weight (total weight) + 1.
WeightedHypergraph mwss_gadget(const WeightedHypergraph& g);

} // namespace hypercol
