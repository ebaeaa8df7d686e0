#pragma once

#include "hypercol/hypergraph.hpp"
#include "hypercol/status.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypercol {

// Hypergraph file (line oriented):
//   c <comment>
//   p hygr <n> <m>          header, once, first non-comment line
//   e <v1> <v2> ...         exactly m edge lines, 1-based vertices
//   w <v> <num>/<den>       optional vertex weight, default 1
//
// Precoloring file: `k <v> <color>` lines.
// Coloring output:  `s COLORABLE|UNCOLORABLE|PROMISE-VIOLATION`, then
//                   `v <vertex> <color>` lines when colorable.
// Vertex sets:      `s STABLE <size>`, optional `x <num>/<den>` total
//                   weight, then `v <vertex>` lines.

struct HypergraphFile {
    WeightedHypergraph graph;
    bool weighted = false; ///< at least one `w` line was present
};

/// Throws ParseError naming the offending line.
HypergraphFile read_hypergraph_file(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);

void write_hypergraph(std::ostream& out, const Hypergraph& g, std::span<const std::string> comments = {});

/// Writes `w` lines only for weights different from 1.
void write_weighted_hypergraph(std::ostream& out, const WeightedHypergraph& g,
                               std::span<const std::string> comments = {});

std::string to_text(const Hypergraph& g);

PartialColoring read_precoloring(std::istream& in, std::size_t n, Color r);
void write_precoloring(std::ostream& out, const PartialColoring& c);

struct ColoringFile {
    std::optional<Status> status; ///< absent when the file has no `s` line
    PartialColoring coloring;     ///< r = largest color seen unless given
};

/// `r == 0` means "infer from the largest color".
ColoringFile read_coloring(std::istream& in, std::size_t n, Color r = 0);

/// Coloring lines are written only for Colorable.
void write_coloring(std::ostream& out, Status status, const PartialColoring* coloring);

void write_vertex_set(std::ostream& out, std::span<const Vertex> set, const std::optional<Weight>& total = {});
std::vector<Vertex> read_vertex_set(std::istream& in, std::size_t n);

std::string format_weight(const Weight& w);
/// Accepts `num/den` or a plain integer. Throws ParseError (line 0).
Weight parse_weight(std::string_view text);

} // namespace hypercol
