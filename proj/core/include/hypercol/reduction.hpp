#pragma once

#include "hypercol/gadget.hpp"
#include "hypercol/hypergraph.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace hypercol {

/// One attached copy of G1 or G2. `vertex_map[v]` is the output vertex of
/// gadget vertex v (slot 0 unused).
struct GadgetCopy {
    std::size_t index = 1; ///< i in G^{i,j}; 1 for the G2 copy
    std::size_t side = 0;  ///< j in G^{i,j}; 0 for the G2 copy
    GadgetKind kind = GadgetKind::G1;
    std::vector<Vertex> vertex_map;
};

/// The three K_4 copies attached for one input edge xy.
struct EdgeBlock {
    Vertex x = 0; ///< input vertices, x < y
    Vertex y = 0;
    Color color = 0;
    /// blocks[i-1] = output vertices (s, t, u, v) of H_i^{xy}.
    std::array<std::array<Vertex, 4>, 3> blocks{};
    std::size_t first_edge = 0; ///< 30 consecutive output edges start here
};

struct ReductionOutput {
    Hypergraph source;               ///< the input graph
    std::vector<Color> edge_coloring; ///< one color in 1..5 per input edge
    Hypergraph hypergraph;
    std::vector<std::string> provenance; ///< per output vertex, slot 0 unused
    std::vector<Vertex> hitting_set;     ///< union of the gadget hitting sets, ascending
    std::vector<GadgetCopy> gadgets;     ///< G2 copy first, then G^{i,j} by i then j
    std::vector<Vertex> source_vertex;   ///< input vertex -> output vertex
    std::vector<EdgeBlock> edge_blocks;  ///< in input edge order
    GadgetCertificate g1;                ///< certificates the copies were made from
    GadgetCertificate g2;
};

namespace reduction_layout {
inline constexpr std::size_t kAnchorRows = 10;
inline constexpr std::size_t kAnchorCount = 3 * kAnchorRows;
inline constexpr std::size_t kCopies = 1 + 3 * (kAnchorRows - 1);
inline constexpr std::size_t kBlockVertices = 12;
inline constexpr std::size_t kBlockEdges = 30;

/// a_j^i with j in 1..10 and i in 1..3 (the A, B, C rows).
constexpr Vertex anchor(std::size_t j, std::size_t i)
{
    return static_cast<Vertex>((i - 1) * kAnchorRows + j);
}
} // namespace reduction_layout

/// Linear 3-uniform hypergraph that is 3-colorable iff the input graph is,
/// built from a 5-edge-coloring of the input, 28 gadget copies on 30 anchor
/// vertices and three K_4 blocks per input edge. Output order: anchors,
/// gadget interiors, input vertices, edge blocks.
/// Throws PreconditionError unless the input is a simple graph of maximum
/// degree at most 4.
ReductionOutput reduce_3col_linear(const Hypergraph& gstar);

/// Expected output sizes for an input with n vertices and m edges.
std::size_t reduction_vertex_count(std::size_t n, std::size_t m);
std::size_t reduction_edge_count(std::size_t m);

/// 3-coloring of the output extending a 3-coloring c of the input: anchors
/// by row, gadget interiors from the stored witness with its colors renamed
/// to match the anchors, and per edge xy and i the split s,u = i and
/// t,v = i+1 when c(x) != i, otherwise s,u = i+1 and t,v = i (mod 3).
/// Throws PreconditionError unless c is a proper 3-coloring of the input.
PartialColoring lift_3coloring(const ReductionOutput& r, const PartialColoring& c);

} // namespace hypercol
