#ifndef PISOT_STRONGCOIN_HPP
#define PISOT_STRONGCOIN_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pisot/overlap.hpp"
#include "pisot/tiling.hpp"

namespace pisot {

inline constexpr int kDefaultKMax = 20;
inline constexpr std::size_t kDefaultMapCap = 100'000;

/// Integer module H spanned by same-colour gaps of a central patch and
/// saturated under x -> beta x. Stands in for the group generated by the
/// eventually return vectors: x is a member when beta^K x lies in H for
/// some K <= k_max.
class GroupG {
public:
    GroupG(const SuspensionTiling& t, const AlgebraicReal& patch_radius, int k_max = kDefaultKMax);

    /// Smallest K with beta^K x in H, if any K <= k_max works.
    std::optional<int> membership(const AlgebraicReal& x) const;
    bool contains(const AlgebraicReal& x) const { return membership(x).has_value(); }

    /// Basis of H in echelon form, as field elements.
    std::vector<AlgebraicReal> basis() const;
    int k_max() const { return k_max_; }

    /// Left endpoint of one tile of each colour in the generating patch.
    const std::vector<AlgebraicReal>& representatives() const { return reps_; }

private:
    bool in_lattice(const AlgebraicReal& x) const;

    FieldPtr field_;
    AlgebraicReal beta_;
    int k_max_;
    BigInt den_{1};
    IntMatrix hnf_;  ///< rows: echelon basis of den * H
    std::vector<AlgebraicReal> reps_;
};

enum class PairStatus { Coincidence, Exhausted };

struct PairReport {
    Letter i;
    Letter j;
    PairStatus status;
    /// Inflation steps of Omega until a shared tile; set on success.
    int level = 0;
    /// On failure, the closed class set that never reaches a coincidence.
    std::vector<OverlapClass> exhausted;
};

struct StrongCoincidenceReport {
    ControlPoints control_points;
    bool in_group = false;
    std::vector<PairReport> pairs;  ///< i <= j, lexicographic

    bool holds() const;
};

/// Strong coincidence for every colour pair of an admissible family.
/// Throws PreconditionError if the family is not admissible.
StrongCoincidenceReport strong_coincidence(const SuspensionTiling& t, const ControlPoints& cp,
                                           std::size_t cap_classes = kDefaultClassCap);

/// Pair check alone; seeds the class (i, j, c_i - c_j) and closes it.
PairReport strong_pair(const SuspensionTiling& t, const std::vector<AlgebraicReal>& c, Letter i, Letter j,
                       std::size_t cap_classes = kDefaultClassCap);

/// The family's difference set lies in the group: one cross-colour test per
/// colour pair using the representative tile positions.
bool in_group(const GroupG& g, const std::vector<AlgebraicReal>& c);

/// Number of tile maps at `level`; throws CapExceeded("tile-maps") above cap.
std::size_t count_tile_maps(const SuspensionTiling& t, int level, std::size_t cap = kDefaultMapCap);

/// Calls `visit` for every tile map of Omega^level in lexicographic order of
/// the choice vector.
void enumerate_tile_maps(const SuspensionTiling& t, int level, const std::function<void(const TileMap&)>& visit,
                         std::size_t cap = kDefaultMapCap);

struct MapSummary {
    std::vector<int> choice;
    std::vector<AlgebraicReal> c;
    bool admissible = false;
    bool in_group = false;
    /// Set for maps passing both filters.
    std::optional<StrongCoincidenceReport> report;
};

struct MscResult {
    int level = 1;
    bool holds = false;
    std::size_t maps_total = 0;
    std::size_t maps_tested = 0;
    bool vacuous = false;
    std::vector<MapSummary> maps;
    /// First tested map that fails, by position in `maps`.
    std::optional<std::size_t> first_failure;
};

struct MscOptions {
    std::size_t cap_maps = kDefaultMapCap;
    std::size_t cap_classes = kDefaultClassCap;
};

MscResult multiple_strong_coincidence(const SuspensionTiling& t, const GroupG& g, int level,
                                      const MscOptions& opt = {});

/// Smallest n such that every vertex of every nontrivial strongly connected
/// component of the vertices that cannot reach a coincidence lies on a closed
/// walk of length n. 1 when there is no such component.
int compute_level_n(const OverlapGraph& g);

struct Witness {
    OverlapClass overlap;  ///< chosen class with distinct colours
    ControlPoints control_points;
    Letter failing_i;
    Letter failing_j;
    PairReport failing_pair;
    bool in_group = false;
};

/// Builds an admissible, in-group family of Omega^level whose control points
/// match on the two tiles of an overlap that never reaches a coincidence, so
/// the pair of their colours fails strong coincidence. `scc` lists vertices
/// of one such component. Throws StructuralError if the component has no
/// class with distinct colours or the construction does not verify.
Witness extract_witness(const SuspensionTiling& t, const OverlapGraph& g, const std::vector<int>& scc,
                        int level, const GroupG& group, std::size_t cap_classes = kDefaultClassCap);

/// Nontrivial strongly connected components of the stuck vertices.
std::vector<std::vector<int>> stuck_components(const OverlapGraph& g);

std::string to_string(PairStatus s);

}  // namespace pisot

#endif
