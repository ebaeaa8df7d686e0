#pragma once

#include "hypercol/hypergraph.hpp"
#include "hypercol/status.hpp"

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

namespace hypercol {

/// Budget value meaning "no matching-number promise was given".
inline constexpr std::size_t kNoPromise = std::numeric_limits<std::size_t>::max();

struct SolveOptions {
    /// Workers for the branch fan-out. Output does not depend on it.
    unsigned threads = 1;
    /// Keep going when the greedy matching already exceeds the budget.
    bool ignore_promise = false;
    /// Line-oriented progress (rounds, collection sizes, potentials).
    std::ostream* trace = nullptr;
};

struct ColoringOutcome {
    Status status = Status::Uncolorable;
    std::optional<PartialColoring> coloring;
    /// For PromiseViolation on a matching budget s: s + 1 disjoint edges.
    std::optional<Matching> promise_witness;
    /// For PromiseViolation in the H_t-free solver: t + 3 vertices inducing
    /// a single 3-edge.
    std::optional<std::vector<Vertex>> induced_copy;
};

/// 2-coloring of a 3-bounded hypergraph whose matching number is at most s.
/// Fixes the greedy maximal matching F, tries every 2-coloring of the
/// covered vertices (lexicographic, vertex order then color), and completes
/// each by forced-color propagation and a 2-SAT instance. The first branch
/// that completes wins. Throws PreconditionError unless g is 3-bounded.
ColoringOutcome solve_2col_3bounded(const Hypergraph& g, std::size_t s, const SolveOptions& options = {});

/// One branch of solve_2col_3bounded: complete `seed` (colors 1..2) by
/// propagation and 2-SAT. Every edge must meet the seed's domain or have
/// at most two vertices.
std::optional<PartialColoring> extend_two_coloring(const Hypergraph& g, const PartialColoring& seed);

/// Trace of the precoloring-extension rounds.
struct ExtensionRound {
    std::size_t round = 0;
    std::size_t collection_size = 0;
    std::size_t psi_min = 0;
    std::size_t psi_max = 0;
};

struct ExtensionTrace {
    std::vector<ExtensionRound> rounds;
    /// Every child had potential at most its parent's minus one.
    bool psi_strictly_decreasing = true;
    /// Every member of round t had potential at most r*k - t.
    bool psi_within_bound = true;
};

struct ExtensionOutcome {
    Status status = Status::Uncolorable;
    std::optional<PartialColoring> coloring;
    std::optional<Matching> promise_witness;
    ExtensionTrace trace;
};

/// Potential of a partial coloring (Y, d): sum over colors i of the largest
/// |e \ Y| among edges e whose colored part uses only color i (0 if none).
std::size_t extension_potential(const Hypergraph& g, const PartialColoring& member);

/// r-precoloring extension in a k-bounded hypergraph with matching number
/// at most s <= r - 1. Keeps a collection of partial colorings; a member
/// with some color class i that no edge can still be monochromatic in is
/// finished by coloring everything else i. Otherwise every member is
/// expanded over a first-fit matching of the edges that could still become
/// monochromatic. Finishes within r*k rounds.
/// Throws PreconditionError if g is not k-bounded, s > r - 1 or `pre` is
/// not a partial r-coloring of g.
ExtensionOutcome precolor_extend_bounded(const Hypergraph& g, Color r, std::size_t k, std::size_t s,
                                         const PartialColoring& pre, const SolveOptions& options = {});

/// 2-coloring of a 3-bounded hypergraph with no induced H_t (t + 3 vertices,
/// one 3-edge). First tries every disjoint pair of stable t-sets X, Y as
/// color classes seeds and solves the rest by 2-SAT; then every coloring in
/// which some color is used fewer than t times. If a 2-SAT model leaves an
/// untouched 3-edge monochromatic, the input contains an induced H_t and
/// PromiseViolation is reported with that copy.
ColoringOutcome solve_2col_htfree(const Hypergraph& g, std::size_t t, const SolveOptions& options = {});

struct StableSetOutcome {
    std::optional<std::vector<Vertex>> stable_set;
    std::optional<Matching> promise_witness;
};

/// Maximum stable set of a k-uniform hypergraph with matching number at
/// most s: removes deletion sets U of size 0, 1, ..., k*s (lexicographic
/// within a size) and returns V \ U for the first stable one.
/// Throws PreconditionError unless g is k-uniform.
StableSetOutcome max_stable_set_bounded(const Hypergraph& g, std::size_t k, std::size_t s,
                                        const SolveOptions& options = {});

} // namespace hypercol
