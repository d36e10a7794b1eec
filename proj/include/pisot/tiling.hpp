#ifndef PISOT_TILING_HPP
#define PISOT_TILING_HPP

#include <cstddef>
#include <vector>

#include "pisot/numberfield.hpp"
#include "pisot/substitution.hpp"

namespace pisot {

/// Interval tile: support [pos, pos + length(color)].
struct Tile {
    Letter color;
    AlgebraicReal pos;
};

/// Finite set of tiles, kept sorted by left endpoint.
struct Patch {
    std::vector<Tile> tiles;
};

inline constexpr std::size_t kDefaultTileCap = 2'000'000;

/// Geometric realisation of a primitive Pisot substitution on the line.
///
/// Construction applies the admission gates: the substitution must be
/// primitive and its Perron root a Pisot number; otherwise GateFailure.
class SuspensionTiling {
public:
    explicit SuspensionTiling(Substitution s);

    const Substitution& substitution() const { return sub_; }
    const PerronData& perron() const { return perron_; }
    const FieldPtr& field() const { return perron_.field; }
    const AlgebraicReal& beta() const { return perron_.beta; }
    const AlgebraicReal& length(Letter c) const { return perron_.lengths.at(static_cast<std::size_t>(c)); }
    const AlgebraicReal& max_length() const { return max_length_; }
    const FixedPointSeed& seed() const { return seed_; }
    int alphabet_size() const { return sub_.size(); }

    AlgebraicReal zero() const { return AlgebraicReal::zero(field()); }
    AlgebraicReal rational(const Rational& q) const { return AlgebraicReal::rational(field(), q); }

    /// Left endpoints of the tiles of sigma^level(c) placed at the origin,
    /// i.e. prefix sums of lengths along the word.
    std::vector<AlgebraicReal> prefix_offsets(const Word& w) const;

    /// Omega(t): the subtiles of beta * supp(t).
    Patch inflate(const Tile& t) const;

    /// Omega^n applied tile by tile.
    Patch inflate_patch(const Patch& p, int n, std::size_t cap = kDefaultTileCap) const;

    /// Tiles of the two-sided fixed point whose supports meet [-radius, radius].
    /// The seed pair left|right abuts at the origin.
    Patch central_patch(const AlgebraicReal& radius, std::size_t cap = kDefaultTileCap) const;

private:
    Substitution sub_;
    PerronData perron_;
    AlgebraicReal max_length_;
    FixedPointSeed seed_;
};

/// Sum of the tile lengths.
AlgebraicReal support_length(const SuspensionTiling& t, const Patch& p);

/// Sorted by position and consecutive supports do not overlap.
bool has_disjoint_interiors(const SuspensionTiling& t, const Patch& p);

/// Translate every tile by g.
Patch translate(const Patch& p, const AlgebraicReal& g);

/// All differences pos(V) - pos(U) over same-coloured tiles of the patch,
/// sorted increasingly and without repetition.
std::vector<AlgebraicReal> return_vectors(const Patch& p);

/// Per-colour choice of one subtile of Omega^level(T_i), with the chosen
/// subtile's colour (target) and offset inside the inflated tile.
struct TileMap {
    int level = 1;
    std::vector<int> choice;  ///< 0-based index into sigma^level(i)
    std::vector<Letter> target;
    std::vector<AlgebraicReal> offset;
};

TileMap make_tile_map(const SuspensionTiling& t, int level, std::vector<int> choice);

/// Same, with sigma^level already materialised.
TileMap make_tile_map(const SuspensionTiling& t, const Substitution& level_power, int level, std::vector<int> choice);

struct ControlPoints {
    TileMap tile_map;
    std::vector<AlgebraicReal> c;
    bool admissible = false;
};

/// Unique solution of beta^level * c_i = c_{target(i)} + offset_i, found by
/// closing each cycle of i -> target(i) and back-substituting along it.
ControlPoints solve_control_points(const SuspensionTiling& t, const TileMap& tm);

/// The shifted prototiles supp(T_i) - c_i share an interior point:
/// max_i(-c_i) < min_i(length_i - c_i).
bool admissible(const SuspensionTiling& t, const std::vector<AlgebraicReal>& c);

}  // namespace pisot

#endif
