#include "hypercol/edge_coloring.hpp"

#include "hypercol/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hypercol {

std::size_t max_degree(const Hypergraph& g)
{
    std::size_t best = 0;
    for (Vertex v : g.vertices())
        best = std::max(best, g.degree(v));
    return best;
}

bool is_proper_edge_coloring(const Hypergraph& g, std::span<const Color> colors)
{
    if (colors.size() != g.num_edges())
        return false;
    for (Vertex v : g.vertices()) {
        std::vector<Color> seen;
        for (std::size_t i : g.incident(v)) {
            if (colors[i] == kUncolored)
                return false;
            seen.push_back(colors[i]);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return false;
    }
    return true;
}

namespace {

class MisraGries {
public:
    explicit MisraGries(const Hypergraph& g)
        : g_(g)
        , palette_(static_cast<Color>(max_degree(g) + 1))
        , at_(g.num_vertices() + 1, std::vector<Vertex>(palette_ + 1, 0))
        , colors_(g.num_edges(), kUncolored)
    {
        for (std::size_t i = 0; i < g.num_edges(); ++i)
            index_.emplace(key(g.edge(i)[0], g.edge(i)[1]), i);
    }

    std::vector<Color> run()
    {
        for (std::size_t i = 0; i < g_.num_edges(); ++i)
            color_edge(g_.edge(i)[0], g_.edge(i)[1]);
        return std::move(colors_);
    }

private:
    static std::uint64_t key(Vertex a, Vertex b)
    {
        if (a > b)
            std::swap(a, b);
        return (std::uint64_t{a} << 32) | b;
    }

    Vertex other(std::size_t i, Vertex v) const
    {
        const Edge& e = g_.edge(i);
        return e[0] == v ? e[1] : e[0];
    }

    Color color_of(Vertex a, Vertex b) const { return colors_[index_.at(key(a, b))]; }
    bool is_free(Vertex x, Color c) const { return at_[x][c] == 0; }

    Color lowest_free(Vertex x) const
    {
        for (Color c = 1; c <= palette_; ++c)
            if (is_free(x, c))
                return c;
        throw std::logic_error("no free color at a vertex");
    }

    void set(Vertex a, Vertex b, Color c)
    {
        colors_[index_.at(key(a, b))] = c;
        at_[a][c] = b;
        at_[b][c] = a;
    }

    void clear(Vertex a, Vertex b)
    {
        const Color c = color_of(a, b);
        if (c == kUncolored)
            return;
        colors_[index_.at(key(a, b))] = kUncolored;
        at_[a][c] = 0;
        at_[b][c] = 0;
    }

    // F[i+1] is a fan successor of F[i] when uF[i+1] is colored and its color is free on F[i].
    bool fan_step(Vertex u, Vertex from, Vertex to) const
    {
        const Color c = color_of(u, to);
        return c != kUncolored && is_free(from, c);
    }

    std::vector<Vertex> maximal_fan(Vertex u, Vertex v) const
    {
        std::vector<Vertex> fan{v};
        std::vector<Vertex> neighbors;
        for (std::size_t i : g_.incident(u))
            neighbors.push_back(other(i, u));
        std::sort(neighbors.begin(), neighbors.end());
        for (;;) {
            const Vertex last = fan.back();
            auto next = std::find_if(neighbors.begin(), neighbors.end(), [&](Vertex w) {
                return std::find(fan.begin(), fan.end(), w) == fan.end() && fan_step(u, last, w);
            });
            if (next == neighbors.end())
                return fan;
            fan.push_back(*next);
        }
    }

    // Swap c and d on the maximal path from u that starts with a d-edge.
    void invert_path(Vertex u, Color c, Color d)
    {
        std::vector<std::pair<Vertex, Vertex>> path;
        Vertex at = u;
        Color want = d;
        while (!is_free(at, want)) {
            const Vertex next = at_[at][want];
            path.emplace_back(at, next);
            at = next;
            want = want == d ? c : d;
        }
        std::vector<Color> old;
        for (auto [a, b] : path) {
            old.push_back(color_of(a, b));
            clear(a, b);
        }
        for (std::size_t i = 0; i < path.size(); ++i)
            set(path[i].first, path[i].second, old[i] == c ? d : c);
    }

    void color_edge(Vertex u, Vertex v)
    {
        std::vector<Vertex> fan = maximal_fan(u, v);
        const Color c = lowest_free(u);
        const Color d = lowest_free(fan.back());
        invert_path(u, c, d);

        // First prefix that is still a fan and ends in a vertex with d free.
        std::size_t w = 0;
        for (;; ++w) {
            if (w == fan.size())
                throw std::logic_error("Misra-Gries found no rotatable fan prefix");
            if (w > 0 && !fan_step(u, fan[w - 1], fan[w]))
                throw std::logic_error("Misra-Gries fan broke before a free vertex");
            if (is_free(fan[w], d))
                break;
        }

        std::vector<Color> shifted;
        for (std::size_t i = 1; i <= w; ++i)
            shifted.push_back(color_of(u, fan[i]));
        for (std::size_t i = 1; i <= w; ++i)
            clear(u, fan[i]);
        for (std::size_t i = 0; i < w; ++i)
            set(u, fan[i], shifted[i]);
        set(u, fan[w], d);
    }

    const Hypergraph& g_;
    Color palette_;
    std::vector<std::vector<Vertex>> at_; // at_[x][c] = neighbor along the c-edge, 0 if c is free
    std::vector<Color> colors_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

} // namespace

std::vector<Color> misra_gries_edge_color(const Hypergraph& g)
{
    if (!std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.size() == 2; }))
        throw PreconditionError("edge coloring needs a simple graph (every edge of size 2)");
    auto colors = MisraGries(g).run();
    if (!is_proper_edge_coloring(g, colors))
        throw std::logic_error("Misra-Gries produced an improper edge coloring");
    return colors;
}

} // namespace hypercol
