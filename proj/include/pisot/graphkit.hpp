#ifndef PISOT_GRAPHKIT_HPP
#define PISOT_GRAPHKIT_HPP

#include <cstdint>
#include <vector>

#include "pisot/core.hpp"
#include "pisot/numberfield.hpp"

namespace pisot {

struct Edge {
    int from;
    int to;
    std::int64_t mult;
    bool operator==(const Edge&) const = default;
};

/// Directed multigraph; parallel edges are merged by adding multiplicities.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : out_(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(out_.size()); }
    int add_vertex();
    void add_edge(int from, int to, std::int64_t mult = 1);

    /// Out-edges sorted by target.
    const std::vector<Edge>& out(int v) const { return out_.at(static_cast<std::size_t>(v)); }
    std::vector<Edge> edges() const;
    bool has_edge(int from, int to) const;
    std::int64_t multiplicity(int from, int to) const;

private:
    void check(int v) const;
    std::vector<std::vector<Edge>> out_;
};

struct SccResult {
    std::vector<int> component;               ///< vertex -> component id
    std::vector<std::vector<int>> components;  ///< members, sorted
    Digraph condensation;                      ///< one vertex per component
};

/// Tarjan decomposition. Component ids are in reverse topological order of
/// the condensation (sinks first).
SccResult scc(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

/// A component is nontrivial when it carries a cycle: size > 1 or a self-loop.
bool is_nontrivial(const Digraph& g, const std::vector<int>& members);

/// Vertices with a path (possibly empty) into `targets`.
std::vector<bool> reachable_to(const Digraph& g, const std::vector<int>& targets);

/// Vertices reachable from `sources`.
std::vector<bool> reachable_from(const Digraph& g, const std::vector<int>& sources);

/// Breadth-first distance to the nearest target; -1 when unreachable.
std::vector<int> distance_to(const Digraph& g, const std::vector<int>& targets);

/// Subgraph induced by `members` (in that order) with multiplicities.
Digraph induced(const Digraph& g, const std::vector<int>& members);

IntMatrix adjacency(const Digraph& g);

using Cycle = std::vector<int>;

/// Spanning subgraph with out-degree exactly one whose cycles are exactly
/// `cycles`. Starting from the cycles, repeatedly attaches the smallest vertex
/// outside the current set having an edge into it, using its smallest such
/// target. Throws PreconditionError unless g is strongly connected and the
/// cycles are nonempty, simple, vertex-disjoint and present in g.
Digraph cycle_extension(const Digraph& g, const std::vector<Cycle>& cycles);

/// Cycles of a graph with out-degree one, each rotated to start at its
/// smallest vertex and listed by that vertex.
std::vector<Cycle> functional_cycles(const Digraph& g);

/// Canonical rotation: smallest vertex first.
Cycle canonical_cycle(Cycle c);

/// The Perron root of a nonnegative integer matrix equals `target` exactly:
/// target is a root of the characteristic polynomial and no real root lies
/// above it.
bool perron_equals(const IntMatrix& m, const AlgebraicReal& target);

}  // namespace pisot

#endif
