#ifndef PISOT_OVERLAP_HPP
#define PISOT_OVERLAP_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pisot/graphkit.hpp"
#include "pisot/tiling.hpp"

namespace pisot {

/// Translation class of an overlap: U at the origin, V - y at `shift`.
struct OverlapClass {
    Letter u;
    Letter v;
    AlgebraicReal shift;

    bool is_coincidence() const { return u == v && shift.is_zero(); }
    /// "(i,j,t)" with 1-based colours.
    std::string label() const;
};

/// Value order: colours, then numeric shift.
bool operator<(const OverlapClass& a, const OverlapClass& b);
bool operator==(const OverlapClass& a, const OverlapClass& b);

/// Exact-key order (colours, then coordinates); cheap, not numeric.
struct ClassKeyLess {
    bool operator()(const OverlapClass& a, const OverlapClass& b) const;
};

/// Supports of the two tiles share an interior point.
bool is_valid_class(const SuspensionTiling& t, const OverlapClass& c);

using WeightedClasses = std::vector<std::pair<OverlapClass, std::int64_t>>;

/// Subtile pairs of Omega^level(U) and Omega^level(V - y) with intersecting
/// interiors, merged by class. `level_power` is sigma^level.
WeightedClasses inflate_class(const SuspensionTiling& t, const Substitution& level_power, int level,
                              const OverlapClass& c);
WeightedClasses inflate_class(const SuspensionTiling& t, const OverlapClass& c, int level = 1);

/// Classes realised by tile pairs (U, V) of the patch with supp(U) and
/// supp(V) - y overlapping, over all y in `ys`. Sorted by value.
std::vector<OverlapClass> seed_overlaps(const SuspensionTiling& t, const Patch& patch,
                                        const std::vector<AlgebraicReal>& ys);

/// Same with ys = return_vectors(patch).
std::vector<OverlapClass> seed_overlaps(const SuspensionTiling& t, const Patch& patch);

inline constexpr std::size_t kDefaultClassCap = 10'000;

struct OverlapGraph {
    std::vector<OverlapClass> vertices;  ///< sorted by value
    Digraph graph;
    int level = 1;

    std::vector<int> coincidences() const;
    std::optional<int> find(const OverlapClass& c) const;
};

/// Breadth-first closure of `seeds` under inflation. Throws CapExceeded
/// ("overlap-classes") when more than `cap` classes appear.
OverlapGraph build_graph(const SuspensionTiling& t, const std::vector<OverlapClass>& seeds, int level = 1,
                         std::size_t cap = kDefaultClassCap);

struct OverlapVerdict {
    bool holds = false;
    /// Shortest path length to a coincidence, -1 when none is reachable.
    std::vector<int> distance;
    /// Vertices that cannot reach a coincidence, ascending.
    std::vector<int> stuck;
};

OverlapVerdict overlap_coincidence(const OverlapGraph& g);

struct SccReport {
    std::vector<int> members;
    IntMatrix matrix;
    bool reaches_coincidence = false;
    /// Perron root of `matrix` equals beta^level.
    bool perron_is_expansion = false;
};

/// Nontrivial strongly connected components free of coincidence vertices.
std::vector<SccReport> expansive_sccs(const SuspensionTiling& t, const OverlapGraph& g);

struct OverlapAnalysis {
    AlgebraicReal radius;
    int doublings = 0;
    OverlapGraph graph;
    OverlapVerdict verdict;
};

/// Seeds from the central patch of `radius`, closes and decides.
OverlapAnalysis analyze_overlaps_at(const SuspensionTiling& t, const AlgebraicReal& radius, int level = 1,
                                    std::size_t cap = kDefaultClassCap);

inline constexpr int kMaxRadiusDoublings = 8;

/// Starts at `radius` (default 8 * max length) and doubles it until the
/// closed vertex set is unchanged by two consecutive doublings.
OverlapAnalysis analyze_overlaps(const SuspensionTiling& t, std::optional<AlgebraicReal> radius = std::nullopt,
                                 int level = 1, std::size_t cap = kDefaultClassCap);

/// Graphviz rendering with deterministic ordering. Coincidences are double
/// circles, vertices that cannot reach one are drawn red.
void write_dot(std::ostream& os, const OverlapGraph& g, const OverlapVerdict& v);

}  // namespace pisot

#endif
