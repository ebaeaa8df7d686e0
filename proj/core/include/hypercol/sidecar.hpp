#pragma once

#include "hypercol/gadget.hpp"
#include "hypercol/reduction.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace hypercol {

// Certificate sidecar next to a generated hypergraph file:
//   c <comment>
//   g G1|G2                 gadget kind
//   anchor <a> <b> <c>
//   Z <v1> <v2> ...         hitting set (may span several lines)
//   witness <v> <color>
//   ecolor <x> <y> <k>      input edge color (reductions)
//   prov <v> <role>         role strings contain no whitespace
struct Sidecar {
    std::optional<GadgetKind> kind;
    std::optional<std::array<Vertex, 3>> anchors;
    std::vector<Vertex> hitting_set;
    std::optional<PartialColoring> witness;
    std::vector<std::tuple<Vertex, Vertex, Color>> edge_colors;
    std::vector<std::string> provenance; ///< n + 1 slots, empty when absent
};

void write_gadget_sidecar(std::ostream& out, const GadgetCertificate& cert, std::span<const std::string> comments = {});
void write_reduction_sidecar(std::ostream& out, const ReductionOutput& r, std::span<const std::string> comments = {});

/// `n` is the vertex count of the hypergraph the sidecar belongs to.
/// Throws ParseError naming the offending line.
Sidecar read_sidecar(std::istream& in, std::size_t n);

/// Throws ParseError (line 0) if the kind, anchors or witness are missing.
GadgetCertificate to_certificate(const Sidecar& s);

} // namespace hypercol
