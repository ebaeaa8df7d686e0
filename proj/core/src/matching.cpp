#include "hypercol/matching.hpp"

#include "hypercol/error.hpp"
#include "hypercol/structure.hpp"

#include <algorithm>

namespace hypercol {

Matching greedy_maximal_matching(const Hypergraph& g)
{
    Matching m;
    std::vector<char> covered(g.num_vertices() + 1, 0);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return covered[v]; }))
            continue;
        for (Vertex v : e)
            covered[v] = 1;
        m.edges.push_back(i);
    }
    return m;
}

namespace {

class MatchingSearch {
public:
    MatchingSearch(const Hypergraph& g, std::size_t cap)
        : g_(g)
        , cap_(cap)
        , blocked_(g.num_vertices() + 1, 0)
    {}

    Matching run()
    {
        search();
        std::sort(best_.begin(), best_.end());
        return Matching{best_};
    }

private:
    bool available(std::size_t i) const
    {
        const Edge& e = g_.edge(i);
        return std::none_of(e.begin(), e.end(), [&](Vertex v) { return blocked_[v]; });
    }

    // Upper bound on how many more disjoint edges fit: live vertices over
    // the smallest live edge size.
    std::size_t bound() const
    {
        std::vector<char> live(g_.num_vertices() + 1, 0);
        std::size_t smallest = 0;
        for (std::size_t i = 0; i < g_.num_edges(); ++i) {
            if (!available(i))
                continue;
            for (Vertex v : g_.edge(i))
                live[v] = 1;
            if (smallest == 0 || g_.edge(i).size() < smallest)
                smallest = g_.edge(i).size();
        }
        if (smallest == 0)
            return 0;
        return static_cast<std::size_t>(std::count(live.begin(), live.end(), 1)) / smallest;
    }

    void search()
    {
        if (done_)
            return;
        if (current_.size() > best_.size()) {
            best_ = current_;
            if (best_.size() > cap_) {
                done_ = true;
                return;
            }
        }
        if (current_.size() + bound() <= best_.size())
            return;

        // Branch on the lowest vertex that still lies in an available edge:
        // either one of its edges is matched, or the vertex stays unmatched.
        Vertex pivot = 0;
        for (Vertex v : g_.vertices()) {
            if (blocked_[v])
                continue;
            const auto inc = g_.incident(v);
            if (std::any_of(inc.begin(), inc.end(), [&](std::size_t i) { return available(i); })) {
                pivot = v;
                break;
            }
        }
        if (pivot == 0)
            return;

        for (std::size_t i : g_.incident(pivot)) {
            if (!available(i))
                continue;
            for (Vertex v : g_.edge(i))
                blocked_[v] = 1;
            current_.push_back(i);
            search();
            current_.pop_back();
            for (Vertex v : g_.edge(i))
                blocked_[v] = 0;
            if (done_)
                return;
        }
        blocked_[pivot] = 1;
        search();
        blocked_[pivot] = 0;
    }

    const Hypergraph& g_;
    std::size_t cap_;
    std::vector<char> blocked_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    bool done_ = false;
};

} // namespace

Matching max_matching_exact(const Hypergraph& g, std::size_t cap)
{
    return MatchingSearch(g, cap).run();
}

namespace {

// Adding u to the vertex set marked in `inside` creates no edge other than
// those already induced.
bool adds_no_edge(const Hypergraph& g, const std::vector<char>& inside, Vertex u)
{
    for (std::size_t i : g.incident(u)) {
        const Edge& e = g.edge(i);
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return v == u || inside[v]; }))
            return false;
    }
    return true;
}

bool extend_one_edge(const Hypergraph& g, std::vector<char>& inside, std::vector<Vertex>& extra,
                     Vertex next, std::size_t need)
{
    if (need == 0)
        return true;
    for (Vertex u = next; u <= g.num_vertices(); ++u) {
        if (inside[u] || !adds_no_edge(g, inside, u))
            continue;
        if (g.num_vertices() - u + 1 < need)
            break;
        inside[u] = 1;
        extra.push_back(u);
        if (extend_one_edge(g, inside, extra, u + 1, need - 1))
            return true;
        extra.pop_back();
        inside[u] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<Vertex>> find_induced_one_edge(const Hypergraph& g, std::size_t t)
{
    if (!is_k_bounded(g, 3))
        throw PreconditionError("find_induced_one_edge needs a 3-bounded hypergraph");
    if (g.num_vertices() < t + 3)
        return std::nullopt;

    std::vector<char> inside(g.num_vertices() + 1, 0);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (e.size() != 3)
            continue;
        if (induced_edges(g, e).size() != 1)
            continue;
        for (Vertex v : e)
            inside[v] = 1;
        std::vector<Vertex> extra;
        const bool found = extend_one_edge(g, inside, extra, 1, t);
        for (Vertex v : e)
            inside[v] = 0;
        for (Vertex v : extra)
            inside[v] = 0;
        if (found) {
            std::vector<Vertex> w(e.begin(), e.end());
            w.insert(w.end(), extra.begin(), extra.end());
            std::sort(w.begin(), w.end());
            return w;
        }
    }
    return std::nullopt;
}

namespace {

class InducedMatchingSearch {
public:
    InducedMatchingSearch(const Hypergraph& g, std::size_t s)
        : g_(g)
        , s_(s)
        , inside_(g.num_vertices() + 1, 0)
        , chosen_(g.num_edges(), 0)
    {}

    std::optional<Matching> run()
    {
        if (search(0))
            return Matching{picked_};
        return std::nullopt;
    }

private:
    // With f added, every edge inside the union must be a picked edge. Edges
    // avoiding f were checked when their vertices entered the union.
    bool keeps_induced(std::size_t f) const
    {
        for (Vertex u : g_.edge(f)) {
            for (std::size_t i : g_.incident(u)) {
                if (i == f || chosen_[i])
                    continue;
                const Edge& e = g_.edge(i);
                if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return inside_[v]; }))
                    return false;
            }
        }
        return true;
    }

    bool search(std::size_t next)
    {
        if (picked_.size() == s_)
            return true;
        for (std::size_t f = next; f < g_.num_edges(); ++f) {
            if (g_.num_edges() - f < s_ - picked_.size())
                break;
            const Edge& e = g_.edge(f);
            if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return inside_[v]; }))
                continue;
            for (Vertex v : e)
                inside_[v] = 1;
            chosen_[f] = 1;
            if (keeps_induced(f)) {
                picked_.push_back(f);
                if (search(f + 1))
                    return true;
                picked_.pop_back();
            }
            chosen_[f] = 0;
            for (Vertex v : e)
                inside_[v] = 0;
        }
        return false;
    }

    const Hypergraph& g_;
    std::size_t s_;
    std::vector<char> inside_;
    std::vector<char> chosen_;
    std::vector<std::size_t> picked_;
};

} // namespace

std::optional<Matching> find_induced_matching(const Hypergraph& g, std::size_t s)
{
    if (!is_k_uniform(g, 3))
        throw PreconditionError("find_induced_matching needs a 3-uniform hypergraph");
    return InducedMatchingSearch(g, s).run();
}

} // namespace hypercol
