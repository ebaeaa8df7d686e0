#pragma once

#include "hypercol/hypergraph.hpp"
#include "hypercol/labeled_graph.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace hypercol {

enum class GadgetKind { G1, G2 };

const char* to_string(GadgetKind kind);

/// Machine-checkable claims about a gadget: its anchors, a hitting set Z
/// (deleting Z leaves no edge) and a 3-coloring giving the anchors three
/// different colors. `provenance[v]` names the construction role of v
/// (slot 0 unused).
struct GadgetCertificate {
    GadgetKind kind = GadgetKind::G1;
    std::array<Vertex, 3> anchors{};
    std::vector<Vertex> hitting_set;
    PartialColoring witness;
    std::vector<std::string> provenance;
};

struct Gadget {
    LabeledGraph labeled;
    Hypergraph hypergraph;
    GadgetCertificate certificate;
};

// Layout of G1 (also G2, which adds one edge):
//   1, 2, 3           anchors a, b, c
//   4 .. 19           H_1 .. H_4, vertices s, t, u, v each
//   20 + 20τ ..       tuple block τ: r_1..r_4, then H_1^T .. H_4^T (s, t, u, v)
// τ runs over T = (p_1, p_2, p_3, p_4) ∈ {s,t,u,v}^4 lexicographically,
// p_i being T's position in H_i.
namespace g1_layout {
inline constexpr std::size_t kAnchors = 3;
inline constexpr std::size_t kHubVertices = 16;
inline constexpr std::size_t kTuples = 256;
inline constexpr std::size_t kBlockVertices = 20;
inline constexpr std::size_t kVertices = kAnchors + kHubVertices + kTuples * kBlockVertices;
inline constexpr std::size_t kEdges = 4 * 6 + kTuples * (5 * 6 + 16);

/// Position 0..3 in block i (1..4) of the hub.
constexpr Vertex hub(std::size_t i, std::size_t pos)
{
    return static_cast<Vertex>(kAnchors + 4 * (i - 1) + pos + 1);
}
/// r_j (j = 1..4) of tuple block τ.
constexpr Vertex root(std::size_t tau, std::size_t j)
{
    return static_cast<Vertex>(kAnchors + kHubVertices + kBlockVertices * tau + j);
}
/// Position 0..3 of H_i^T (i = 1..4) in tuple block τ.
constexpr Vertex tuple_block(std::size_t tau, std::size_t i, std::size_t pos)
{
    return static_cast<Vertex>(kAnchors + kHubVertices + kBlockVertices * tau + 4 + 4 * (i - 1) + pos + 1);
}
} // namespace g1_layout

/// Gadget forcing its anchors to be all equal or all distinct in every
/// 3-coloring. 5139 vertices, 11800 edges, linear and 3-uniform.
Gadget build_g1();

/// G1 plus the edge {a, b, c}: anchors all distinct in every 3-coloring.
Gadget build_g2();

} // namespace hypercol
