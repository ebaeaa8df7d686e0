#pragma once

#include "hypercol/gadget.hpp"
#include "hypercol/hypergraph.hpp"
#include "hypercol/oracle.hpp"
#include "hypercol/reduction.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercol {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Named pass/fail checks plus free-form notes. Checks keep the order in
/// which they were run.
struct Report {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    void add(std::string name, bool pass, std::string detail);
    bool passed() const;
    /// nullptr if no check has this name.
    const CheckResult* find(const std::string& name) const;
};

/// `CHECK <name> PASS|FAIL <detail>` per check, then `NOTE <text>` per note.
void write_report(std::ostream& out, const Report& report);

/// Structural claims of a G1/G2 certificate, each reported on its own:
/// linear, uniform, z-size (|Z| <= 19), anchors-in-z, z-deletion,
/// anchor-multiplicity, witness-valid, witness-anchors-distinct.
Report check_certificate(const Hypergraph& g, const GadgetCertificate& cert);

/// Local exhaustive checks that together give the dichotomy of G1 (anchor
/// colors all equal or all distinct). For every precoloring of the anchors
/// with exactly two equal, with γ the unused color:
///   local-k4     every proper coloring of each hub K_4 uses γ
///   local-block  the same for every K_4 of every tuple block
///   clash        in every tuple block, every proper coloring of H_0^T puts γ
///                on some r_j such that every proper coloring of H_j^T has a
///                γ vertex v at position p with {v, r_j, T[p]} an edge
///   tuples       all 256 hub tuples have a block
/// Colorings of a block only need to respect the edges made of two block
/// vertices and an anchor. Blocks are located through the provenance.
Report verify_g1_dichotomy(const Hypergraph& g, const GadgetCertificate& cert);

/// Checks a reduction output against its input graph: linear, uniform,
/// hitting-set, increments, edge-coloring, provenance, matches-construction
/// and, when a 3-coloring is given or brute force finds one, lift.
Report verify_reduction(const ReductionOutput& r, const Hypergraph& gstar, const PartialColoring* coloring = nullptr,
                        const OracleLimits& limits = {});

} // namespace hypercol
