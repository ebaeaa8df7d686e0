#pragma once

// Reference answers computed from definitions only. Nothing here calls
// into the library beyond reading a Hypergraph's vertex count and edges.

#include "hypercol/hypergraph.hpp"
#include "hypercol/twosat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hypercol::testkit {

/// color[v] for v in 1..n (slot 0 unused); 0 means uncolored.
using ColorVector = std::vector<Color>;

/// Every vertex colored in 1..r and no edge has a single color.
bool naive_proper(const Hypergraph& g, const ColorVector& color, Color r);

/// Backtracking over vertices 1..n, checking each edge once its last vertex
/// is colored. Vertices with pre[v] != 0 keep their color.
std::optional<ColorVector> naive_extend(const Hypergraph& g, Color r, const ColorVector& pre);
std::optional<ColorVector> naive_color(const Hypergraph& g, Color r);

/// Tries all 2^n assignments.
std::optional<twosat::Assignment> naive_two_sat(const twosat::Instance& inst);
bool naive_satisfies(const twosat::Instance& inst, const twosat::Assignment& a);

/// Maximum number of pairwise disjoint edges, by recursion over edges.
std::size_t naive_matching_number(const Hypergraph& g);

/// Largest stable set size / weight over all 2^n subsets.
std::size_t naive_max_stable_size(const Hypergraph& g);
Weight naive_max_stable_weight(const Hypergraph& g, const std::vector<Weight>& w);

/// Some (t+3)-subset induces exactly one edge, of size 3.
bool naive_has_induced_one_edge(const Hypergraph& g, std::size_t t);

/// Incident edges get different nonzero colors, all at most max_color.
bool naive_proper_edge_coloring(const Hypergraph& g, const std::vector<Color>& colors, Color max_color);

} // namespace hypercol::testkit
