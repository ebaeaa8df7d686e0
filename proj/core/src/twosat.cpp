#include "hypercol/twosat.hpp"

#include "hypercol/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

namespace hypercol::twosat {

void Instance::add(Literal a, Literal b)
{
    for (const Literal& l : {a, b})
        if (l.var < 1 || l.var > nvars_)
            throw PreconditionError("literal on variable " + std::to_string(l.var) + " outside 1.."
                                    + std::to_string(nvars_));
    clauses_.push_back({a, b});
}

namespace {

std::uint32_t node(Literal l)
{
    return 2 * (l.var - 1) + (l.positive ? 0 : 1);
}

struct ImplicationGraph {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> targets;
};

// Clause (a or b) gives !a -> b and !b -> a.
ImplicationGraph build_graph(const Instance& inst)
{
    const std::size_t nodes = 2 * inst.num_vars();
    ImplicationGraph g;
    g.offsets.assign(nodes + 1, 0);
    for (const Clause& c : inst.clauses()) {
        ++g.offsets[node(!c.a) + 1];
        ++g.offsets[node(!c.b) + 1];
    }
    for (std::size_t i = 0; i < nodes; ++i)
        g.offsets[i + 1] += g.offsets[i];
    g.targets.resize(g.offsets.back());
    std::vector<std::uint32_t> fill(g.offsets.begin(), g.offsets.end() - 1);
    for (const Clause& c : inst.clauses()) {
        g.targets[fill[node(!c.a)]++] = node(c.b);
        g.targets[fill[node(!c.b)]++] = node(c.a);
    }
    return g;
}

// Iterative Tarjan: components are numbered in the order they complete,
// which is reverse topological order of the condensation.
std::vector<std::uint32_t> tarjan(const ImplicationGraph& g)
{
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t nodes = g.offsets.size() - 1;
    std::vector<std::uint32_t> index(nodes, unvisited);
    std::vector<std::uint32_t> low(nodes, 0);
    std::vector<std::uint32_t> comp(nodes, unvisited);
    std::vector<char> on_stack(nodes, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> frames; // node, next edge offset
    std::uint32_t counter = 0;
    std::uint32_t components = 0;

    for (std::uint32_t root = 0; root < nodes; ++root) {
        if (index[root] != unvisited)
            continue;
        frames.emplace_back(root, g.offsets[root]);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            if (next < g.offsets[v + 1]) {
                const std::uint32_t w = g.targets[next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, g.offsets[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::uint32_t done = v;
            if (low[done] == index[done]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = components;
                } while (w != done);
                ++components;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const std::uint32_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return comp;
}

} // namespace

std::vector<std::uint32_t> implication_components(const Instance& inst)
{
    return tarjan(build_graph(inst));
}

bool has_complementary_component(const Instance& inst)
{
    const auto comp = implication_components(inst);
    for (std::size_t v = 0; v < inst.num_vars(); ++v)
        if (comp[2 * v] == comp[2 * v + 1])
            return true;
    return false;
}

std::optional<Assignment> solve(const Instance& inst)
{
    const auto comp = implication_components(inst);
    Assignment values(inst.num_vars() + 1, false);
    for (std::size_t v = 0; v < inst.num_vars(); ++v) {
        if (comp[2 * v] == comp[2 * v + 1])
            return std::nullopt;
        // Smaller id = later in topological order.
        values[v + 1] = comp[2 * v] < comp[2 * v + 1];
    }
    return values;
}

bool satisfies(const Instance& inst, const Assignment& values)
{
    if (values.size() != inst.num_vars() + 1)
        return false;
    const auto holds = [&](Literal l) { return values[l.var] == l.positive; };
    return std::all_of(inst.clauses().begin(), inst.clauses().end(),
                       [&](const Clause& c) { return holds(c.a) || holds(c.b); });
}

void write_implication_dot(std::ostream& out, const Instance& inst)
{
    const auto name = [](Literal l) { return (l.positive ? "x" : "nx") + std::to_string(l.var); };
    out << "digraph implications {\n";
    for (const Clause& c : inst.clauses()) {
        out << "  " << name(!c.a) << " -> " << name(c.b) << ";\n";
        if (!(c.a == c.b))
            out << "  " << name(!c.b) << " -> " << name(c.a) << ";\n";
    }
    out << "}\n";
}

} // namespace hypercol::twosat
