#pragma once

#include "hypercol/hypergraph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hypercol {

/// Largest vertex degree, 0 for an edgeless hypergraph.
std::size_t max_degree(const Hypergraph& g);

/// Proper edge coloring of a simple graph (every edge of size 2) with colors
/// 1..Δ+1, one per edge index. Fan rotation and cd-path inversion; ties go
/// to the lowest free color and the lowest-numbered fan vertex.
/// Throws PreconditionError if some edge does not have exactly two vertices.
std::vector<Color> misra_gries_edge_color(const Hypergraph& g);

/// One color per edge, all nonzero, incident edges differ.
bool is_proper_edge_coloring(const Hypergraph& g, std::span<const Color> colors);

} // namespace hypercol
