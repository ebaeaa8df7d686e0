#include "hypercol/oracle.hpp"

#include "hypercol/error.hpp"
#include "hypercol/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace hypercol {

bool within_color_cap(std::size_t free_vertices, Color r, const OracleLimits& limits)
{
    if (r <= 1 || free_vertices == 0)
        return true;
    // work * r > cap, tested without overflow.
    const std::uint64_t cap = std::uint64_t{1} << std::min(limits.log2_work, 62U);
    std::uint64_t work = 1;
    for (std::size_t i = 0; i < free_vertices; ++i) {
        if (work > cap / r)
            return false;
        work *= r;
    }
    return true;
}

namespace {

class ColoringSearch {
public:
    ColoringSearch(const Hypergraph& g, Color r, PartialColoring start)
        : g_(g)
        , r_(r)
        , c_(std::move(start))
    {
        for (Vertex v : g.vertices())
            if (!c_.is_colored(v))
                free_.push_back(v);
    }

    std::optional<PartialColoring> run()
    {
        if (search(0))
            return c_;
        return std::nullopt;
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

    bool search(std::size_t pos)
    {
        if (pos == free_.size())
            return true;
        const Vertex v = free_[pos];
        for (Color col = 1; col <= r_; ++col) {
            c_.assign(v, col);
            if (!closes_monochromatic(v) && search(pos + 1))
                return true;
        }
        c_.unassign(v);
        return false;
    }

    const Hypergraph& g_;
    Color r_;
    PartialColoring c_;
    std::vector<Vertex> free_;
};

} // namespace

std::optional<PartialColoring> brute_force_color(const Hypergraph& g, Color r, const OracleLimits& limits)
{
    return brute_force_extend(g, r, PartialColoring(g.num_vertices(), r), limits);
}

std::optional<PartialColoring> brute_force_extend(const Hypergraph& g, Color r, const PartialColoring& pre,
                                                  const OracleLimits& limits)
{
    if (r == 0)
        throw PreconditionError("r must be positive");
    if (pre.num_vertices() != g.num_vertices())
        throw PreconditionError("precoloring has the wrong vertex count");
    const std::size_t free_count = g.num_vertices() - pre.domain_size();
    if (!within_color_cap(free_count, r, limits))
        throw CapExceeded(std::to_string(r) + "^" + std::to_string(free_count) + " colorings exceed 2^"
                          + std::to_string(limits.log2_work));

    PartialColoring start(g.num_vertices(), r);
    for (Vertex v : pre.domain()) {
        if (pre.color(v) > r)
            return std::nullopt;
        start.assign(v, pre.color(v));
    }
    if (first_monochromatic_edge(g, start))
        return std::nullopt;
    return ColoringSearch(g, r, std::move(start)).run();
}

namespace {

class WeightedStableSearch {
public:
    explicit WeightedStableSearch(const WeightedHypergraph& g)
        : g_(g)
        , in_(g.base().num_vertices() + 1, 0)
        , suffix_(g.base().num_vertices() + 2, Weight(0))
    {
        for (Vertex v = static_cast<Vertex>(g.base().num_vertices()); v >= 1; --v)
            suffix_[v] = suffix_[v + 1] + g.weight(v);
    }

    std::vector<Vertex> run()
    {
        search(1, Weight(0));
        return best_;
    }

private:
    bool can_add(Vertex v) const
    {
        for (std::size_t i : g_.base().incident(v)) {
            const Edge& e = g_.base().edge(i);
            if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return u == v || in_[u]; }))
                return false;
        }
        return true;
    }

    void search(Vertex v, const Weight& current)
    {
        if (found_ && current + suffix_[v] <= best_weight_)
            return;
        if (v > g_.base().num_vertices()) {
            // Reaching here means strictly better than the incumbent.
            best_weight_ = current;
            best_ = chosen_;
            found_ = true;
            return;
        }
        if (can_add(v)) {
            in_[v] = 1;
            chosen_.push_back(v);
            search(v + 1, current + g_.weight(v));
            chosen_.pop_back();
            in_[v] = 0;
        }
        search(v + 1, current);
    }

    const WeightedHypergraph& g_;
    std::vector<char> in_;
    std::vector<Weight> suffix_;
    std::vector<Vertex> chosen_;
    std::vector<Vertex> best_;
    Weight best_weight_{0};
    bool found_ = false;
};

} // namespace

std::vector<Vertex> max_weight_stable_set_bruteforce(const WeightedHypergraph& g, const OracleLimits& limits)
{
    if (g.base().num_vertices() > limits.max_stable_vertices)
        throw CapExceeded(std::to_string(g.base().num_vertices()) + " vertices exceed the exact stable-set cap of "
                          + std::to_string(limits.max_stable_vertices));
    return WeightedStableSearch(g).run();
}

} // namespace hypercol
