#include "hypercol/solvers.hpp"

#include "hypercol/error.hpp"
#include "hypercol/structure.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hypercol {

namespace {

// Single color on the colored part of e, kUncolored if e has no colored
// vertex, and r + 1 if two colors appear. e belongs to E_i exactly when
// this is i or kUncolored.
Color colored_part_class(const Edge& e, const PartialColoring& c)
{
    Color seen = kUncolored;
    for (Vertex v : e) {
        const Color col = c.color(v);
        if (col == kUncolored)
            continue;
        if (seen == kUncolored)
            seen = col;
        else if (seen != col)
            return c.r() + 1;
    }
    return seen;
}

struct ColoringHash {
    std::size_t operator()(const std::vector<Color>& v) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (Color c : v)
            h = (h ^ c) * 1099511628211ULL;
        return h;
    }
};

// All colorings of `fresh` (lexicographic) that keep `base` a partial
// coloring of g; each one is handed to `emit`.
class ChildEnumerator {
public:
    ChildEnumerator(const Hypergraph& g, Color r, PartialColoring base, std::vector<Vertex> fresh)
        : g_(g)
        , r_(r)
        , c_(std::move(base))
        , fresh_(std::move(fresh))
    {}

    template <typename Emit>
    void run(Emit&& emit)
    {
        walk(0, emit);
    }

private:
    bool closes_monochromatic(Vertex v) const
    {
        const Color col = c_.color(v);
        for (std::size_t i : g_.incident(v)) {
            const Edge& e = g_.edge(i);
            if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return c_.color(u) == col; }))
                return true;
        }
        return false;
    }

    template <typename Emit>
    void walk(std::size_t pos, Emit& emit)
    {
        if (pos == fresh_.size()) {
            emit(c_);
            return;
        }
        const Vertex v = fresh_[pos];
        for (Color col = 1; col <= r_; ++col) {
            c_.assign(v, col);
            if (!closes_monochromatic(v))
                walk(pos + 1, emit);
        }
        c_.unassign(v);
    }

    const Hypergraph& g_;
    Color r_;
    PartialColoring c_;
    std::vector<Vertex> fresh_;
};

} // namespace

std::size_t extension_potential(const Hypergraph& g, const PartialColoring& member)
{
    const Color r = member.r();
    std::vector<std::size_t> best(r + 1, 0);
    for (const Edge& e : g.edges()) {
        const Color cls = colored_part_class(e, member);
        if (cls > r)
            continue;
        std::size_t open = 0;
        for (Vertex v : e)
            open += member.is_colored(v) ? 0 : 1;
        if (cls == kUncolored) {
            for (Color i = 1; i <= r; ++i)
                best[i] = std::max(best[i], open);
        } else {
            best[cls] = std::max(best[cls], open);
        }
    }
    std::size_t psi = 0;
    for (Color i = 1; i <= r; ++i)
        psi += best[i];
    return psi;
}

ExtensionOutcome precolor_extend_bounded(const Hypergraph& g, Color r, std::size_t k, std::size_t s,
                                         const PartialColoring& pre, const SolveOptions& options)
{
    if (r == 0)
        throw PreconditionError("r must be positive");
    if (s + 1 > r)
        throw PreconditionError("matching budget s = " + std::to_string(s) + " exceeds r - 1 = "
                                + std::to_string(r - 1));
    if (!is_k_bounded(g, k))
        throw PreconditionError("hypergraph is not " + std::to_string(k) + "-bounded");
    if (pre.num_vertices() != g.num_vertices() || !is_partial_coloring(g, pre))
        throw PreconditionError("precoloring is not a partial coloring of the hypergraph");
    for (Vertex v : pre.domain())
        if (pre.color(v) > r)
            throw PreconditionError("precoloring uses a color above r");

    ExtensionOutcome out;
    PartialColoring start(g.num_vertices(), r);
    for (Vertex v : pre.domain())
        start.assign(v, pre.color(v));

    std::vector<PartialColoring> collection{std::move(start)};
    std::vector<std::size_t> psi{extension_potential(g, collection.front())};
    const std::size_t psi_cap = static_cast<std::size_t>(r) * k;

    for (std::size_t round = 0;; ++round) {
        ExtensionRound info{round, collection.size(), *std::min_element(psi.begin(), psi.end()),
                            *std::max_element(psi.begin(), psi.end())};
        out.trace.rounds.push_back(info);
        if (info.psi_max + round > psi_cap)
            out.trace.psi_within_bound = false;
        if (options.trace)
            *options.trace << "round " << round << " size " << info.collection_size << " psi-min " << info.psi_min
                           << " psi-max " << info.psi_max << '\n';

        // A member with an empty E_i is finished by coloring the rest i.
        for (const PartialColoring& member : collection) {
            std::vector<char> nonempty(r + 1, 0);
            for (const Edge& e : g.edges()) {
                const Color cls = colored_part_class(e, member);
                if (cls == kUncolored)
                    std::fill(nonempty.begin() + 1, nonempty.end(), 1);
                else if (cls <= r)
                    nonempty[cls] = 1;
            }
            const auto empty_class = std::find(nonempty.begin() + 1, nonempty.end(), 0);
            if (empty_class == nonempty.end())
                continue;
            const Color fill = static_cast<Color>(empty_class - nonempty.begin());
            PartialColoring done = member;
            for (Vertex v : g.vertices())
                if (!done.is_colored(v))
                    done.assign(v, fill);
            if (!validate_coloring(g, done))
                throw std::logic_error("completion by an unused class produced an improper coloring");
            out.status = Status::Colorable;
            out.coloring = std::move(done);
            return out;
        }

        if (round >= psi_cap && !options.ignore_promise)
            throw std::logic_error("precoloring extension did not finish within r*k rounds");

        std::vector<PartialColoring> next;
        std::vector<std::size_t> next_psi;
        std::unordered_set<std::vector<Color>, ColoringHash> seen;
        for (std::size_t idx = 0; idx < collection.size(); ++idx) {
            const PartialColoring& member = collection[idx];

            // First-fit matching inside the union of the E_i.
            Matching picked;
            std::vector<char> covered(g.num_vertices() + 1, 0);
            for (std::size_t i = 0; i < g.num_edges(); ++i) {
                const Edge& e = g.edge(i);
                if (colored_part_class(e, member) > r)
                    continue;
                if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return covered[v]; }))
                    continue;
                for (Vertex v : e)
                    covered[v] = 1;
                picked.edges.push_back(i);
            }
            if (picked.size() > s && !options.ignore_promise) {
                picked.edges.resize(s + 1);
                out.status = Status::PromiseViolation;
                out.promise_witness = std::move(picked);
                return out;
            }

            std::vector<Vertex> fresh;
            for (Vertex v : picked.covered_vertices(g))
                if (!member.is_colored(v))
                    fresh.push_back(v);

            ChildEnumerator(g, r, member, std::move(fresh)).run([&](const PartialColoring& child) {
                const std::size_t child_psi = extension_potential(g, child);
                if (child_psi + 1 > psi[idx])
                    out.trace.psi_strictly_decreasing = false;
                std::vector<Color> key(child.raw().begin(), child.raw().end());
                if (!seen.insert(std::move(key)).second)
                    return;
                next.push_back(child);
                next_psi.push_back(child_psi);
            });
        }

        if (next.empty()) {
            out.status = Status::Uncolorable;
            return out;
        }
        collection = std::move(next);
        psi = std::move(next_psi);
    }
}

} // namespace hypercol
