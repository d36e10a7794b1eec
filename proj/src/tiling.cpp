#include "pisot/tiling.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

namespace pisot {

namespace {

bool pos_less(const Tile& a, const Tile& b) { return a.pos < b.pos; }

}  // namespace

SuspensionTiling::SuspensionTiling(Substitution s)
    : sub_(std::move(s)), perron_(perron_data(sub_)), max_length_(perron_.lengths.front()),
      seed_(fixed_point_seed(sub_)) {
    if (!perron_.pisot) throw GateFailure("Pisot gate failed: the Perron root has a conjugate of modulus >= 1");
    for (const auto& l : perron_.lengths)
        if (l > max_length_) max_length_ = l;
}

std::vector<AlgebraicReal> SuspensionTiling::prefix_offsets(const Word& w) const {
    std::vector<AlgebraicReal> out;
    out.reserve(w.size());
    AlgebraicReal x = zero();
    for (Letter a : w) {
        out.push_back(x);
        x += length(a);
    }
    return out;
}

Patch SuspensionTiling::inflate(const Tile& t) const {
    Patch out;
    AlgebraicReal x = beta() * t.pos;
    for (Letter a : sub_.rule(t.color)) {
        out.tiles.push_back({a, x});
        x += length(a);
    }
    return out;
}

Patch SuspensionTiling::inflate_patch(const Patch& p, int n, std::size_t cap) const {
    if (n < 0) throw PreconditionError("inflate_patch: negative level");
    Patch cur = p;
    for (int k = 0; k < n; ++k) {
        Patch next;
        for (const Tile& t : cur.tiles) {
            if (next.tiles.size() + sub_.rule(t.color).size() > cap)
                throw CapExceeded("patch-size", cap, "inflated patch too large");
            Patch sub = inflate(t);
            next.tiles.insert(next.tiles.end(), sub.tiles.begin(), sub.tiles.end());
        }
        std::sort(next.tiles.begin(), next.tiles.end(), pos_less);
        cur = std::move(next);
    }
    return cur;
}

Patch SuspensionTiling::central_patch(const AlgebraicReal& radius, std::size_t cap) const {
    if (radius.sign() < 0) throw PreconditionError("central_patch: negative radius");
    const AlgebraicReal lo = -radius;
    auto meets = [&](const Tile& t) { return t.pos <= radius && t.pos + length(t.color) >= lo; };

    Patch p;
    p.tiles.push_back({seed_.left, -length(seed_.left)});
    p.tiles.push_back({seed_.right, zero()});
    auto covered = [&] {
        const Tile& last = p.tiles.back();
        return p.tiles.front().pos <= lo && last.pos + length(last.color) >= radius;
    };
    // Tiles entirely outside the window only inflate to tiles farther out,
    // so trimming between steps keeps the window exact.
    while (!covered()) {
        p = inflate_patch(p, seed_.power, cap);
        std::erase_if(p.tiles, [&](const Tile& t) { return !meets(t); });
    }
    std::erase_if(p.tiles, [&](const Tile& t) { return !meets(t); });
    return p;
}

AlgebraicReal support_length(const SuspensionTiling& t, const Patch& p) {
    AlgebraicReal total = t.zero();
    for (const Tile& x : p.tiles) total += t.length(x.color);
    return total;
}

bool has_disjoint_interiors(const SuspensionTiling& t, const Patch& p) {
    for (std::size_t k = 0; k + 1 < p.tiles.size(); ++k)
        if (p.tiles[k].pos + t.length(p.tiles[k].color) > p.tiles[k + 1].pos) return false;
    return true;
}

Patch translate(const Patch& p, const AlgebraicReal& g) {
    Patch out = p;
    for (Tile& x : out.tiles) x.pos += g;
    return out;
}

std::vector<AlgebraicReal> return_vectors(const Patch& p) {
    std::unordered_set<AlgebraicReal, CoordHash> seen;
    for (const Tile& u : p.tiles)
        for (const Tile& v : p.tiles)
            if (u.color == v.color) seen.insert(v.pos - u.pos);
    std::vector<AlgebraicReal> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

TileMap make_tile_map(const SuspensionTiling& t, const Substitution& level_power, int level, std::vector<int> choice) {
    const int m = t.alphabet_size();
    if (static_cast<int>(choice.size()) != m) throw PreconditionError("tile map needs one choice per colour");
    TileMap tm;
    tm.level = level;
    tm.choice = std::move(choice);
    for (Letter i = 0; i < m; ++i) {
        const Word& w = level_power.rule(i);
        const int k = tm.choice[i];
        if (k < 0 || k >= static_cast<int>(w.size()))
            throw PreconditionError("tile map choice out of range for colour " + std::to_string(i + 1));
        AlgebraicReal u = t.zero();
        for (int r = 0; r < k; ++r) u += t.length(w[r]);
        tm.target.push_back(w[k]);
        tm.offset.push_back(std::move(u));
    }
    return tm;
}

TileMap make_tile_map(const SuspensionTiling& t, int level, std::vector<int> choice) {
    return make_tile_map(t, power(t.substitution(), level), level, std::move(choice));
}

ControlPoints solve_control_points(const SuspensionTiling& t, const TileMap& tm) {
    const int m = t.alphabet_size();
    const AlgebraicReal scale = pow(t.beta(), tm.level);
    const AlgebraicReal scale_inv = scale.inverse();
    std::vector<std::optional<AlgebraicReal>> c(m);

    for (Letter start = 0; start < m; ++start) {
        if (c[start]) continue;
        // Walk the functional graph until a solved vertex or a repeat.
        std::vector<Letter> path;
        std::vector<int> where(m, -1);
        Letter v = start;
        while (!c[v] && where[v] < 0) {
            where[v] = static_cast<int>(path.size());
            path.push_back(v);
            v = tm.target[v];
        }
        std::size_t tail_end = path.size();
        if (!c[v]) {
            // path[where[v]..] is a fresh cycle.
            const std::size_t first = static_cast<std::size_t>(where[v]);
            const std::size_t len = path.size() - first;
            AlgebraicReal num = t.zero();
            for (std::size_t k = 0; k < len; ++k)
                num += tm.offset[path[first + k]] * pow(scale, static_cast<int>(len - 1 - k));
            c[v] = num / (pow(scale, static_cast<int>(len)) - Rational(1));
            for (std::size_t k = path.size(); k-- > first + 1;)
                c[path[k]] = (*c[tm.target[path[k]]] + tm.offset[path[k]]) * scale_inv;
            tail_end = first;
        }
        for (std::size_t k = tail_end; k-- > 0;)
            c[path[k]] = (*c[tm.target[path[k]]] + tm.offset[path[k]]) * scale_inv;
    }

    ControlPoints out{tm, {}, false};
    for (auto& x : c) out.c.push_back(std::move(*x));
    out.admissible = admissible(t, out.c);
    return out;
}

bool admissible(const SuspensionTiling& t, const std::vector<AlgebraicReal>& c) {
    AlgebraicReal left = -c.front();
    AlgebraicReal right = t.length(0) - c.front();
    for (Letter i = 1; i < static_cast<Letter>(c.size()); ++i) {
        left = std::max(left, -c[i]);
        right = std::min(right, t.length(i) - c[i]);
    }
    return left < right;
}

}  // namespace pisot
