#pragma once

#include "hypercol/hypergraph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hypercol {

bool is_k_uniform(const Hypergraph& g, std::size_t k);
bool is_k_bounded(const Hypergraph& g, std::size_t k);

/// Every two distinct edges share at most one vertex.
bool is_linear(const Hypergraph& g);

/// No edge lies entirely inside `set`. Vertices outside 1..n are ignored.
bool is_stable(const Hypergraph& g, std::span<const Vertex> set);

/// Indices of the edges contained in `set`, ascending.
std::vector<std::size_t> induced_edges(const Hypergraph& g, std::span<const Vertex> set);

/// Referenced edges exist and are pairwise disjoint.
bool is_matching(const Hypergraph& g, const Matching& m);

/// A matching that every edge of g meets.
bool is_maximal_matching(const Hypergraph& g, const Matching& m);

/// First edge (in storage order) that is fully colored by c with one color.
std::optional<std::size_t> first_monochromatic_edge(const Hypergraph& g, const PartialColoring& c);

/// c uses colors in 1..r, covers only vertices of g and colors no edge of
/// g[X] monochromatically, X being c's domain.
bool is_partial_coloring(const Hypergraph& g, const PartialColoring& c);

/// c colors every vertex of g and each color class is stable.
bool validate_coloring(const Hypergraph& g, const PartialColoring& c);

/// Vertices of `set` as a membership mask indexed by vertex.
std::vector<char> vertex_mask(std::size_t n, std::span<const Vertex> set);

} // namespace hypercol
