#include "hypercol/solvers.hpp"

#include "hypercol/error.hpp"
#include "hypercol/matching.hpp"
#include "hypercol/parallel.hpp"
#include "hypercol/structure.hpp"
#include "hypercol/twosat.hpp"
#include "two_coloring_detail.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hypercol {

namespace detail {

bool propagate_forced_colors(const Hypergraph& g, PartialColoring& c)
{
    std::deque<std::size_t> queue;
    std::vector<char> queued(g.num_edges(), 1);
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        queue.push_back(i);

    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        queued[i] = 0;

        const Edge& e = g.edge(i);
        Vertex open = 0;
        std::size_t open_count = 0;
        Color seen = kUncolored;
        bool mixed = false;
        for (Vertex v : e) {
            const Color col = c.color(v);
            if (col == kUncolored) {
                open = v;
                ++open_count;
            } else if (seen == kUncolored) {
                seen = col;
            } else if (seen != col) {
                mixed = true;
            }
        }
        if (mixed)
            continue;
        if (open_count == 0)
            return false; // fully colored, single color
        if (open_count != 1)
            continue;
        if (seen == kUncolored)
            return false; // edge of size one
        c.assign(open, seen == 1 ? 2 : 1);
        for (std::size_t j : g.incident(open)) {
            if (!queued[j]) {
                queued[j] = 1;
                queue.push_back(j);
            }
        }
    }
    return true;
}

TwoSatCompletion complete_by_two_sat(const Hypergraph& g, const PartialColoring& seed)
{
    std::vector<twosat::Var> var_of(g.num_vertices() + 1, 0);
    std::vector<Vertex> vertex_of{0};
    for (Vertex v : g.vertices()) {
        if (!seed.is_colored(v)) {
            var_of[v] = static_cast<twosat::Var>(vertex_of.size());
            vertex_of.push_back(v);
        }
    }

    twosat::Instance inst(vertex_of.size() - 1);
    std::vector<std::size_t> untouched_triples;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        std::vector<Vertex> open;
        Color seen = kUncolored;
        bool mixed = false;
        for (Vertex v : e) {
            const Color col = seed.color(v);
            if (col == kUncolored)
                open.push_back(v);
            else if (seen == kUncolored)
                seen = col;
            else if (seen != col)
                mixed = true;
        }
        if (mixed)
            continue;
        if (open.empty())
            return {}; // monochromatic inside the seed

        if (seen != kUncolored) {
            if (open.size() > 2)
                throw PreconditionError("edge " + std::to_string(i) + " has more than two uncolored vertices");
            // Some open vertex must take the other color.
            const bool need_two = seen == 1;
            const twosat::Literal a{var_of[open.front()], need_two};
            const twosat::Literal b{var_of[open.back()], need_two};
            inst.add(a, b);
            continue;
        }
        switch (open.size()) {
        case 1:
            return {};
        case 2:
            inst.add(twosat::pos(var_of[open[0]]), twosat::pos(var_of[open[1]]));
            inst.add(twosat::neg(var_of[open[0]]), twosat::neg(var_of[open[1]]));
            break;
        case 3:
            untouched_triples.push_back(i);
            break;
        default:
            throw PreconditionError("edge " + std::to_string(i) + " has more than three vertices");
        }
    }

    const auto model = twosat::solve(inst);
    if (!model)
        return {};

    TwoSatCompletion out;
    PartialColoring full = seed;
    for (std::size_t x = 1; x < vertex_of.size(); ++x)
        full.assign(vertex_of[x], (*model)[x] ? 2 : 1);
    for (std::size_t i : untouched_triples) {
        const Edge& e = g.edge(i);
        if (full.color(e[0]) == full.color(e[1]) && full.color(e[1]) == full.color(e[2])) {
            out.untouched_monochromatic = i;
            break;
        }
    }
    out.coloring = std::move(full);
    return out;
}

} // namespace detail

std::optional<PartialColoring> extend_two_coloring(const Hypergraph& g, const PartialColoring& seed)
{
    PartialColoring c = seed;
    if (!detail::propagate_forced_colors(g, c))
        return std::nullopt;
    auto done = detail::complete_by_two_sat(g, c);
    if (done.untouched_monochromatic)
        throw PreconditionError("edge " + std::to_string(*done.untouched_monochromatic)
                                + " avoids the seed; the seed must cover a maximal matching");
    if (done.coloring && !validate_coloring(g, *done.coloring))
        throw std::logic_error("2-SAT completion produced an improper coloring");
    return std::move(done.coloring);
}

namespace {

bool has_singleton_edge(const Hypergraph& g)
{
    return std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.size() == 1; });
}

Matching first_edges(const Matching& m, std::size_t count)
{
    Matching out;
    out.edges.assign(m.edges.begin(), m.edges.begin() + static_cast<std::ptrdiff_t>(std::min(count, m.size())));
    return out;
}

} // namespace

ColoringOutcome solve_2col_3bounded(const Hypergraph& g, std::size_t s, const SolveOptions& options)
{
    if (!is_k_bounded(g, 3))
        throw PreconditionError("2-coloring solver needs a 3-bounded hypergraph");

    ColoringOutcome out;
    if (has_singleton_edge(g)) {
        out.status = Status::Uncolorable;
        return out;
    }

    const Matching f = greedy_maximal_matching(g);
    if (s != kNoPromise && f.size() > s && !options.ignore_promise) {
        out.status = Status::PromiseViolation;
        out.promise_witness = first_edges(f, s + 1);
        return out;
    }

    const std::vector<Vertex> covered = f.covered_vertices(g);
    const std::size_t m = covered.size();
    if (m > 40)
        throw CapExceeded("greedy matching covers " + std::to_string(m) + " vertices; 2^" + std::to_string(m)
                          + " branches is too many");
    const std::size_t branches = std::size_t{1} << m;
    if (options.trace)
        *options.trace << "matching " << f.size() << " covered " << m << " branches " << branches << '\n';

    auto hit = first_success(branches, options.threads, [&](std::size_t index) -> std::optional<PartialColoring> {
        PartialColoring seed(g.num_vertices(), 2);
        for (std::size_t j = 0; j < m; ++j)
            seed.assign(covered[j], static_cast<Color>(((index >> (m - 1 - j)) & 1U) + 1));
        if (first_monochromatic_edge(g, seed))
            return std::nullopt;
        return extend_two_coloring(g, seed);
    });

    if (!hit) {
        out.status = Status::Uncolorable;
        return out;
    }
    if (options.trace)
        *options.trace << "branch " << hit->first << " extends\n";
    out.status = Status::Colorable;
    out.coloring = std::move(hit->second);
    return out;
}

namespace {

// Lexicographic k-subsets of the candidate list.
template <typename Fn>
bool for_each_subset(const std::vector<Vertex>& pool, std::size_t k, Fn&& fn)
{
    if (k > pool.size())
        return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    std::vector<Vertex> subset(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i)
            subset[i] = pool[idx[i]];
        if (fn(subset))
            return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

using HtBranch = std::variant<PartialColoring, std::vector<Vertex>>;

} // namespace

ColoringOutcome solve_2col_htfree(const Hypergraph& g, std::size_t t, const SolveOptions& options)
{
    if (!is_k_bounded(g, 3))
        throw PreconditionError("H_t-free solver needs a 3-bounded hypergraph");

    ColoringOutcome out;
    if (has_singleton_edge(g)) {
        out.status = Status::Uncolorable;
        return out;
    }

    const std::size_t n = g.num_vertices();
    std::vector<Vertex> all(g.vertices().begin(), g.vertices().end());

    // Branch A: both classes have at least t vertices.
    std::vector<std::vector<Vertex>> stable_sets;
    for_each_subset(all, t, [&](const std::vector<Vertex>& x) {
        if (is_stable(g, x))
            stable_sets.push_back(x);
        return false;
    });
    if (options.trace)
        *options.trace << "stable " << t << "-sets " << stable_sets.size() << '\n';

    auto hit = first_success(stable_sets.size(), options.threads, [&](std::size_t xi) -> std::optional<HtBranch> {
        const auto& x = stable_sets[xi];
        const auto in_x = vertex_mask(n, x);
        std::optional<HtBranch> found;
        for (const auto& y : stable_sets) {
            if (std::any_of(y.begin(), y.end(), [&](Vertex v) { return in_x[v]; }))
                continue;
            PartialColoring seed(n, 2);
            for (Vertex v : x)
                seed.assign(v, 1);
            for (Vertex v : y)
                seed.assign(v, 2);
            auto done = detail::complete_by_two_sat(g, seed);
            if (!done.coloring)
                continue;
            if (done.untouched_monochromatic) {
                // The color class inside the seed plus the edge induces H_t.
                const Edge& e = g.edge(*done.untouched_monochromatic);
                const Color col = done.coloring->color(e.front());
                std::vector<Vertex> copy = col == 1 ? x : y;
                copy.insert(copy.end(), e.begin(), e.end());
                std::sort(copy.begin(), copy.end());
                found = HtBranch{std::move(copy)};
            } else {
                found = HtBranch{std::move(*done.coloring)};
            }
            break;
        }
        return found;
    });

    if (hit) {
        if (auto* coloring = std::get_if<PartialColoring>(&hit->second)) {
            if (!validate_coloring(g, *coloring))
                throw std::logic_error("H_t-free completion produced an improper coloring");
            out.status = Status::Colorable;
            out.coloring = std::move(*coloring);
        } else {
            out.status = Status::PromiseViolation;
            out.induced_copy = std::get<std::vector<Vertex>>(std::move(hit->second));
        }
        return out;
    }

    // Branch B: some color i is used on fewer than t vertices.
    for (Color i = 1; i <= 2; ++i) {
        for (std::size_t size = 0; size < t && size <= n; ++size) {
            std::optional<PartialColoring> found;
            for_each_subset(all, size, [&](const std::vector<Vertex>& q) {
                PartialColoring c(n, 2);
                for (Vertex v : g.vertices())
                    c.assign(v, i == 1 ? 2 : 1);
                for (Vertex v : q)
                    c.assign(v, i);
                if (!validate_coloring(g, c))
                    return false;
                found = std::move(c);
                return true;
            });
            if (found) {
                out.status = Status::Colorable;
                out.coloring = std::move(found);
                return out;
            }
        }
    }
    out.status = Status::Uncolorable;
    return out;
}

} // namespace hypercol
