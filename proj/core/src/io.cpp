#include "hypercol/io.hpp"

#include "hypercol/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace hypercol {

using detail::for_each_record;
using detail::parse_int;
using detail::parse_vertex;

std::string format_weight(const Weight& w)
{
    return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

Weight parse_weight(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = parse_int<std::int64_t>(text.substr(0, slash), 0, "weight");
    std::int64_t den = 1;
    if (slash != std::string_view::npos)
        den = parse_int<std::int64_t>(text.substr(slash + 1), 0, "weight denominator");
    if (den == 0)
        throw ParseError(0, "weight has a zero denominator");
    return Weight(num, den);
}

HypergraphFile read_hypergraph_file(std::istream& in)
{
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> first_seen;
    std::vector<Weight> weights;
    std::vector<char> weight_given;
    bool weighted = false;

    for_each_record(in, [&](std::size_t lineno, const std::vector<std::string_view>& tok) {
        if (!have_header) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "hygr")
                throw ParseError(lineno, "expected header 'p hygr <n> <m>'");
            n = parse_int<std::size_t>(tok[2], lineno, "vertex count");
            m = parse_int<std::size_t>(tok[3], lineno, "edge count");
            if (n > std::numeric_limits<Vertex>::max() - 2)
                throw ParseError(lineno, "vertex count too large");
            have_header = true;
            weights.assign(n, Weight(1));
            weight_given.assign(n + 1, 0);
            edges.reserve(m);
            return;
        }
        if (tok[0] == "p")
            throw ParseError(lineno, "second header line");
        if (tok[0] == "e") {
            if (tok.size() == 1)
                throw ParseError(lineno, "empty edge");
            if (edges.size() == m)
                throw ParseError(lineno, "more than " + std::to_string(m) + " edge lines");
            Edge e;
            e.reserve(tok.size() - 1);
            for (std::size_t i = 1; i < tok.size(); ++i)
                e.push_back(parse_vertex(tok[i], lineno, n));
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw ParseError(lineno, "edge repeats a vertex");
            const auto [it, fresh] = first_seen.emplace(e, lineno);
            if (!fresh)
                throw ParseError(lineno, "duplicate edge (first on line " + std::to_string(it->second) + ")");
            edges.push_back(std::move(e));
            return;
        }
        if (tok[0] == "w") {
            if (tok.size() != 3)
                throw ParseError(lineno, "expected 'w <v> <num>/<den>'");
            const Vertex v = parse_vertex(tok[1], lineno, n);
            if (weight_given[v])
                throw ParseError(lineno, "second weight for vertex " + std::to_string(v));
            Weight w;
            try {
                w = parse_weight(tok[2]);
            } catch (const ParseError& err) {
                throw ParseError(lineno, err.what());
            }
            if (w < 0)
                throw ParseError(lineno, "negative weight");
            weights[v - 1] = w;
            weight_given[v] = 1;
            weighted = true;
            return;
        }
        throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
    });

    if (!have_header)
        throw ParseError(0, "missing 'p hygr' header");
    if (edges.size() != m)
        throw ParseError(0, "header announces " + std::to_string(m) + " edges, found "
                                + std::to_string(edges.size()));
    return {WeightedHypergraph(Hypergraph(n, std::move(edges)), std::move(weights)), weighted};
}

Hypergraph parse_hypergraph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_hypergraph_file(in).graph.base();
}

void write_hypergraph(std::ostream& out, const Hypergraph& g, std::span<const std::string> comments)
{
    for (const auto& c : comments)
        out << "c " << c << '\n';
    out << "p hygr " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    std::string line;
    for (const Edge& e : g.edges()) {
        line.assign("e");
        for (Vertex v : e) {
            line.push_back(' ');
            line.append(std::to_string(v));
        }
        line.push_back('\n');
        out << line;
    }
}

void write_weighted_hypergraph(std::ostream& out, const WeightedHypergraph& g, std::span<const std::string> comments)
{
    write_hypergraph(out, g.base(), comments);
    for (Vertex v : g.base().vertices())
        if (g.weight(v) != Weight(1))
            out << "w " << v << ' ' << format_weight(g.weight(v)) << '\n';
}

std::string to_text(const Hypergraph& g)
{
    std::ostringstream out;
    write_hypergraph(out, g);
    return out.str();
}

PartialColoring read_precoloring(std::istream& in, std::size_t n, Color r)
{
    PartialColoring c(n, r);
    for_each_record(in, [&](std::size_t lineno, const std::vector<std::string_view>& tok) {
        if (tok.size() != 3 || tok[0] != "k")
            throw ParseError(lineno, "expected 'k <v> <color>'");
        const Vertex v = parse_vertex(tok[1], lineno, n);
        const auto color = parse_int<Color>(tok[2], lineno, "color");
        if (color < 1 || color > r)
            throw ParseError(lineno, "color outside 1.." + std::to_string(r));
        if (c.is_colored(v))
            throw ParseError(lineno, "vertex " + std::to_string(v) + " precolored twice");
        c.assign(v, color);
    });
    return c;
}

void write_precoloring(std::ostream& out, const PartialColoring& c)
{
    for (Vertex v : c.domain())
        out << "k " << v << ' ' << c.color(v) << '\n';
}

ColoringFile read_coloring(std::istream& in, std::size_t n, Color r)
{
    ColoringFile file;
    std::vector<Color> colors(n + 1, kUncolored);
    Color largest = 0;
    for_each_record(in, [&](std::size_t lineno, const std::vector<std::string_view>& tok) {
        if (tok[0] == "s") {
            if (tok.size() != 2)
                throw ParseError(lineno, "expected 's <STATUS>'");
            if (file.status)
                throw ParseError(lineno, "second status line");
            file.status = status_from_string(tok[1]);
            if (!file.status)
                throw ParseError(lineno, "unknown status '" + std::string(tok[1]) + "'");
            return;
        }
        if (tok[0] != "v" || tok.size() != 3)
            throw ParseError(lineno, "expected 'v <vertex> <color>'");
        const Vertex v = parse_vertex(tok[1], lineno, n);
        const auto color = parse_int<Color>(tok[2], lineno, "color");
        if (color < 1 || (r != 0 && color > r))
            throw ParseError(lineno, "color out of range");
        if (colors[v] != kUncolored)
            throw ParseError(lineno, "vertex " + std::to_string(v) + " colored twice");
        colors[v] = color;
        largest = std::max(largest, color);
    });
    file.coloring = PartialColoring(n, r != 0 ? r : std::max<Color>(largest, 1));
    for (Vertex v = 1; v <= n; ++v)
        if (colors[v] != kUncolored)
            file.coloring.assign(v, colors[v]);
    return file;
}

void write_coloring(std::ostream& out, Status status, const PartialColoring* coloring)
{
    out << "s " << to_string(status) << '\n';
    if (status != Status::Colorable || coloring == nullptr)
        return;
    for (Vertex v : coloring->domain())
        out << "v " << v << ' ' << coloring->color(v) << '\n';
}

void write_vertex_set(std::ostream& out, std::span<const Vertex> set, const std::optional<Weight>& total)
{
    out << "s STABLE " << set.size() << '\n';
    if (total)
        out << "x " << format_weight(*total) << '\n';
    for (Vertex v : set)
        out << "v " << v << '\n';
}

std::vector<Vertex> read_vertex_set(std::istream& in, std::size_t n)
{
    std::vector<Vertex> out;
    for_each_record(in, [&](std::size_t lineno, const std::vector<std::string_view>& tok) {
        if (tok[0] == "s" || tok[0] == "x")
            return;
        if (tok[0] != "v" || tok.size() != 2)
            throw ParseError(lineno, "expected 'v <vertex>'");
        out.push_back(parse_vertex(tok[1], lineno, n));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace hypercol
