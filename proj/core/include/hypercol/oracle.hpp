#pragma once

#include "hypercol/hypergraph.hpp"

#include <optional>
#include <vector>

namespace hypercol {

/// Exhaustive solvers used as reference answers. Each refuses (CapExceeded)
/// when the search space is above its cap.
struct OracleLimits {
    /// Coloring search runs only while r^(free vertices) <= 2^log2_work.
    unsigned log2_work = 28;
    /// Weighted stable set search runs only for n <= this.
    std::size_t max_stable_vertices = 24;
};

/// True when brute_force_color(g, r) would run under `limits`.
bool within_color_cap(std::size_t free_vertices, Color r, const OracleLimits& limits = {});

/// Backtracking over vertices 1..n, colors ascending, pruning on the first
/// monochromatic edge. Returns the first proper coloring in that order.
std::optional<PartialColoring> brute_force_color(const Hypergraph& g, Color r, const OracleLimits& limits = {});

/// Same search with the vertices of `pre` fixed. A precoloring that already
/// has a monochromatic edge (or a color above r) has no extension.
std::optional<PartialColoring> brute_force_extend(const Hypergraph& g, Color r, const PartialColoring& pre,
                                                  const OracleLimits& limits = {});

/// Exact maximum-weight stable set by include-first subset search with
/// stability and weight-bound pruning. Among optimal sets the one with the
/// lexicographically largest membership vector (vertex 1 first) is returned.
std::vector<Vertex> max_weight_stable_set_bruteforce(const WeightedHypergraph& g, const OracleLimits& limits = {});

} // namespace hypercol
