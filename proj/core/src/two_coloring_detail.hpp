#pragma once

#include "hypercol/hypergraph.hpp"

#include <optional>

namespace hypercol::detail {

/// Forces colors along edges with one uncolored vertex and a single color
/// on the rest, until nothing changes. Returns false on a monochromatic
/// fully colored edge. Two colors only.
bool propagate_forced_colors(const Hypergraph& g, PartialColoring& c);

struct TwoSatCompletion {
    /// The seed completed to a 2-coloring of every vertex.
    std::optional<PartialColoring> coloring;
    /// A model exists but leaves this edge (three vertices, none in the
    /// seed) monochromatic. `coloring` then holds the offending model.
    std::optional<std::size_t> untouched_monochromatic;
};

/// Encodes the remaining constraints of a 2-colored seed as 2-SAT
/// (variable true = color 2):
///  - edge with colored part all color j and uncolored u[,w]:
///    j = 1 gives (x_u or x_w), j = 2 gives (!x_u or !x_w)
///  - uncolored 2-edge {u, w}: (x_u or x_w) and (!x_u or !x_w)
///  - uncolored 3-edge: no clause
/// Returns an empty completion when the seed or the instance is infeasible.
TwoSatCompletion complete_by_two_sat(const Hypergraph& g, const PartialColoring& seed);

} // namespace hypercol::detail
