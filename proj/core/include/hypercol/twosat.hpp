#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hypercol::twosat {

using Var = std::uint32_t; ///< 1-based

struct Literal {
    Var var = 0;
    bool positive = true;

    Literal operator!() const { return {var, !positive}; }
    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(Var v) { return {v, true}; }
inline Literal neg(Var v) { return {v, false}; }

/// Two-literal clause. A unit clause is written (l, l).
struct Clause {
    Literal a;
    Literal b;
};

class Instance {
public:
    explicit Instance(std::size_t nvars = 0)
        : nvars_(nvars)
    {}

    std::size_t num_vars() const noexcept { return nvars_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    /// Throws PreconditionError for a variable outside 1..num_vars().
    void add(Literal a, Literal b);
    void add_unit(Literal a) { add(a, a); }

private:
    std::size_t nvars_;
    std::vector<Clause> clauses_;
};

/// `values[v]` for v in 1..nvars; slot 0 unused.
using Assignment = std::vector<bool>;

/// Linear-time decision via strongly connected components of the
/// implication graph. The model sets x true iff the component of x comes
/// after the component of !x in topological order.
std::optional<Assignment> solve(const Instance& inst);

bool satisfies(const Instance& inst, const Assignment& values);

/// Component id per implication-graph node, node 2(v-1) being x_v and
/// 2(v-1)+1 being !x_v. Ids are in reverse topological order.
std::vector<std::uint32_t> implication_components(const Instance& inst);

/// Some variable shares a component with its negation.
bool has_complementary_component(const Instance& inst);

/// Implication graph in Graphviz DOT, for debugging.
void write_implication_dot(std::ostream& out, const Instance& inst);

} // namespace hypercol::twosat
