#pragma once

#include "hypercol/hypergraph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hypercol {

/// First-fit maximal matching: edges are scanned in storage order and kept
/// when disjoint from everything kept so far.
Matching greedy_maximal_matching(const Hypergraph& g);

/// Exact branch and bound. Returns a maximum matching when nu(g) <= cap and
/// otherwise stops at the first matching of size cap + 1, which certifies
/// nu(g) > cap.
Matching max_matching_exact(const Hypergraph& g, std::size_t cap = static_cast<std::size_t>(-1));

/// Looks for t + 3 vertices W such that g[W] has exactly one edge and that
/// edge has size 3 (an induced copy of H_t). Edges are tried in storage order
/// and the t extra vertices lexicographically. Requires g to be 3-bounded.
std::optional<std::vector<Vertex>> find_induced_one_edge(const Hypergraph& g, std::size_t t);

/// s pairwise disjoint edges whose union induces no further edge. Requires
/// g to be 3-uniform.
std::optional<Matching> find_induced_matching(const Hypergraph& g, std::size_t s);

} // namespace hypercol
