#include "hypercol/solvers.hpp"

#include "hypercol/error.hpp"
#include "hypercol/matching.hpp"
#include "hypercol/parallel.hpp"
#include "hypercol/structure.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace hypercol {

namespace {

// V \ U is stable iff every edge meets U.
bool hits_every_edge(const Hypergraph& g, const std::vector<char>& in_u)
{
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return std::any_of(e.begin(), e.end(), [&](Vertex v) { return in_u[v]; });
    });
}

// Lexicographically first deletion set of `size` whose smallest element is
// `first`.
std::optional<std::vector<Vertex>> first_deletion_set(const Hypergraph& g, Vertex first, std::size_t size)
{
    const std::size_t n = g.num_vertices();
    std::vector<char> in_u(n + 1, 0);
    std::vector<Vertex> u{first};
    in_u[first] = 1;

    const auto walk = [&](auto&& self, Vertex next) -> bool {
        if (u.size() == size)
            return hits_every_edge(g, in_u);
        for (Vertex v = next; v + (size - u.size()) <= n + 1; ++v) {
            u.push_back(v);
            in_u[v] = 1;
            if (self(self, v + 1))
                return true;
            in_u[v] = 0;
            u.pop_back();
        }
        return false;
    };
    if (walk(walk, first + 1))
        return u;
    return std::nullopt;
}

} // namespace

StableSetOutcome max_stable_set_bounded(const Hypergraph& g, std::size_t k, std::size_t s,
                                        const SolveOptions& options)
{
    if (!is_k_uniform(g, k))
        throw PreconditionError("stable-set solver needs a " + std::to_string(k) + "-uniform hypergraph");

    StableSetOutcome out;
    Matching f = greedy_maximal_matching(g);
    if (s != kNoPromise && f.size() > s && !options.ignore_promise) {
        f.edges.resize(s + 1);
        out.promise_witness = std::move(f);
        return out;
    }

    const std::size_t n = g.num_vertices();
    const std::size_t limit = std::min(n, s == kNoPromise ? n : k * s);
    std::optional<std::vector<Vertex>> deletion;
    if (g.num_edges() == 0) {
        deletion.emplace();
    } else {
        for (std::size_t size = 1; size <= limit && !deletion; ++size) {
            if (options.trace)
                *options.trace << "deletion size " << size << '\n';
            auto hit = first_success(n - size + 1, options.threads, [&](std::size_t i) {
                return first_deletion_set(g, static_cast<Vertex>(i + 1), size);
            });
            if (hit)
                deletion = std::move(hit->second);
        }
    }
    if (!deletion) {
        // Only reachable when the greedy matching was ignored past its budget.
        throw CapExceeded("no stable set after deleting " + std::to_string(limit) + " vertices");
    }

    const auto in_u = vertex_mask(n, *deletion);
    std::vector<Vertex> stable;
    for (Vertex v : g.vertices())
        if (!in_u[v])
            stable.push_back(v);
    out.stable_set = std::move(stable);
    return out;
}

} // namespace hypercol
