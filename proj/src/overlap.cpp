#include "pisot/overlap.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace pisot {

std::string OverlapClass::label() const {
    return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "," + shift.str() + ")";
}

bool operator<(const OverlapClass& a, const OverlapClass& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.shift < b.shift;
}

bool operator==(const OverlapClass& a, const OverlapClass& b) {
    return a.u == b.u && a.v == b.v && a.shift == b.shift;
}

bool ClassKeyLess::operator()(const OverlapClass& a, const OverlapClass& b) const {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return coords_less(a.shift.coords(), b.shift.coords());
}

namespace {

struct ClassHash {
    std::size_t operator()(const OverlapClass& c) const {
        return CoordHash{}(c.shift) * 31 + static_cast<std::size_t>(c.u) * 1009 + static_cast<std::size_t>(c.v);
    }
};

using ClassSet = std::unordered_set<OverlapClass, ClassHash>;

}  // namespace

bool is_valid_class(const SuspensionTiling& t, const OverlapClass& c) {
    return -t.length(c.v) < c.shift && c.shift < t.length(c.u);
}

WeightedClasses inflate_class(const SuspensionTiling& t, const Substitution& level_power, int level,
                              const OverlapClass& c) {
    const Word& wu = level_power.rule(c.u);
    const Word& wv = level_power.rule(c.v);
    const auto pu = t.prefix_offsets(wu);
    auto pv = t.prefix_offsets(wv);
    const AlgebraicReal start = pow(t.beta(), level) * c.shift;
    for (auto& x : pv) x += start;

    // Both rows are contiguous and sorted; sweep them like a merge.
    std::map<OverlapClass, std::int64_t, ClassKeyLess> acc;
    std::size_t i = 0, j = 0;
    while (i < wu.size() && j < wv.size()) {
        const AlgebraicReal end_u = pu[i] + t.length(wu[i]);
        const AlgebraicReal end_v = pv[j] + t.length(wv[j]);
        if (pu[i] < end_v && pv[j] < end_u) acc[OverlapClass{wu[i], wv[j], pv[j] - pu[i]}] += 1;
        const auto order = end_u <=> end_v;
        if (order <= 0) ++i;
        if (order >= 0) ++j;
    }
    WeightedClasses out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

WeightedClasses inflate_class(const SuspensionTiling& t, const OverlapClass& c, int level) {
    return inflate_class(t, level == 1 ? t.substitution() : power(t.substitution(), level), level, c);
}

namespace {

// Positions of a patch are integer combinations of the tile lengths, so one
// common denominator turns every coordinate vector into machine integers.
class ScaledFrame {
public:
    using Vec = std::vector<std::int64_t>;

    ScaledFrame(const FieldPtr& field, const std::vector<const AlgebraicReal*>& values) : field_(field) {
        for (const AlgebraicReal* x : values)
            for (Eigen::Index k = 0; k < x->coords().size(); ++k)
                den_ = mp::lcm(den_, BigInt(mp::denominator(x->coords()(k))));
    }

    std::optional<Vec> scale(const AlgebraicReal& x) const {
        static const BigInt limit = BigInt(1) << 58;
        Vec out;
        for (Eigen::Index k = 0; k < x.coords().size(); ++k) {
            const Rational q = x.coords()(k) * Rational(den_);
            const BigInt n = mp::numerator(q);
            if (mp::abs(n) >= limit) return std::nullopt;
            out.push_back(n.convert_to<std::int64_t>());
        }
        return out;
    }

    AlgebraicReal unscale(const Vec& v) const {
        Vector<Rational> c(static_cast<Eigen::Index>(v.size()));
        for (std::size_t k = 0; k < v.size(); ++k) c(static_cast<Eigen::Index>(k)) = Rational(BigInt(v[k]), den_);
        return AlgebraicReal(field_, std::move(c));
    }

    int sign(const Vec& v) const { return field_->sign_of_small(v.data()); }

private:
    FieldPtr field_;
    BigInt den_{1};
};

using Vec = ScaledFrame::Vec;

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

// Open-addressing set of fixed-width integer keys, stored flat. The pair
// loop in seeding inserts one key per tile pair, so per-key allocation would
// dominate.
class FlatKeySet {
public:
    explicit FlatKeySet(std::size_t width) : width_(width) { rehash(1024); }

    std::size_t size() const { return count_; }
    const std::int64_t* key(std::size_t slot) const { return &keys_[slot * width_]; }
    bool used(std::size_t slot) const { return used_[slot]; }
    std::size_t capacity() const { return used_.size(); }

    void insert(const std::int64_t* k) {
        if (2 * (count_ + 1) > capacity()) rehash(2 * capacity());
        place(k);
    }

private:
    std::size_t hash(const std::int64_t* k) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::size_t i = 0; i < width_; ++i) {
            h ^= static_cast<std::uint64_t>(k[i]);
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

    void place(const std::int64_t* k) {
        const std::size_t mask = capacity() - 1;
        for (std::size_t slot = hash(k) & mask;; slot = (slot + 1) & mask) {
            if (!used_[slot]) {
                used_[slot] = true;
                std::copy(k, k + width_, &keys_[slot * width_]);
                ++count_;
                return;
            }
            if (std::equal(k, k + width_, &keys_[slot * width_])) return;
        }
    }

    void rehash(std::size_t cap) {
        std::vector<std::int64_t> old_keys = std::move(keys_);
        std::vector<bool> old_used = std::move(used_);
        keys_.assign(cap * width_, 0);
        used_.assign(cap, false);
        count_ = 0;
        for (std::size_t slot = 0; slot < old_used.size(); ++slot)
            if (old_used[slot]) place(&old_keys[slot * width_]);
    }

    std::size_t width_;
    std::size_t count_ = 0;
    std::vector<std::int64_t> keys_;
    std::vector<bool> used_;
};

std::vector<OverlapClass> seed_generic(const SuspensionTiling& t, const Patch& patch,
                                       const std::vector<AlgebraicReal>& ys) {
    ClassSet gaps;
    for (const Tile& a : patch.tiles)
        for (const Tile& b : patch.tiles) gaps.insert(OverlapClass{a.color, b.color, b.pos - a.pos});
    std::vector<AlgebraicReal> sorted_ys = ys;
    std::sort(sorted_ys.begin(), sorted_ys.end());
    ClassSet found;
    for (const OverlapClass& g : gaps) {
        const AlgebraicReal lo = g.shift - t.length(g.u);
        const AlgebraicReal hi = g.shift + t.length(g.v);
        for (auto it = std::upper_bound(sorted_ys.begin(), sorted_ys.end(), lo); it != sorted_ys.end() && *it < hi;
             ++it)
            found.insert(OverlapClass{g.u, g.v, g.shift - *it});
    }
    return {found.begin(), found.end()};
}

std::optional<std::vector<OverlapClass>> seed_scaled(const SuspensionTiling& t, const Patch& patch,
                                                     const std::vector<AlgebraicReal>* ys) {
    std::vector<const AlgebraicReal*> values;
    for (const Tile& x : patch.tiles) values.push_back(&x.pos);
    for (Letter c = 0; c < t.alphabet_size(); ++c) values.push_back(&t.length(c));
    if (ys)
        for (const auto& y : *ys) values.push_back(&y);
    const ScaledFrame frame(t.field(), values);

    std::vector<Vec> pos, len;
    for (const Tile& x : patch.tiles) {
        auto v = frame.scale(x.pos);
        if (!v) return std::nullopt;
        pos.push_back(std::move(*v));
    }
    for (Letter c = 0; c < t.alphabet_size(); ++c) len.push_back(*frame.scale(t.length(c)));

    // Keys are (colour pair, coordinates of the difference).
    const std::size_t d = len.front().size();
    const int m = t.alphabet_size();
    std::vector<std::int64_t> buf(d + 1);
    auto pair_key = [&](std::size_t a, std::size_t b) {
        buf[0] = patch.tiles[a].color * m + patch.tiles[b].color;
        for (std::size_t k = 0; k < d; ++k) buf[k + 1] = pos[b][k] - pos[a][k];
    };

    std::vector<Vec> sorted_ys;
    if (ys) {
        for (const auto& y : *ys) {
            auto v = frame.scale(y);
            if (!v) return std::nullopt;
            sorted_ys.push_back(std::move(*v));
        }
    } else {
        FlatKeySet seen(d + 1);
        for (std::size_t a = 0; a < pos.size(); ++a)
            for (std::size_t b = 0; b < pos.size(); ++b)
                if (patch.tiles[a].color == patch.tiles[b].color) {
                    pair_key(a, b);
                    buf[0] = 0;
                    seen.insert(buf.data());
                }
        for (std::size_t slot = 0; slot < seen.capacity(); ++slot)
            if (seen.used(slot)) sorted_ys.emplace_back(seen.key(slot) + 1, seen.key(slot) + 1 + d);
    }
    auto less = [&](const Vec& a, const Vec& b) { return frame.sign(sub(a, b)) < 0; };
    std::sort(sorted_ys.begin(), sorted_ys.end(), less);

    FlatKeySet gaps(d + 1);
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = 0; b < pos.size(); ++b) {
            pair_key(a, b);
            gaps.insert(buf.data());
        }
    FlatKeySet found(d + 1);
    for (std::size_t slot = 0; slot < gaps.capacity(); ++slot) {
        if (!gaps.used(slot)) continue;
        const std::int64_t* g = gaps.key(slot);
        const Letter u = static_cast<Letter>(g[0] / m), v = static_cast<Letter>(g[0] % m);
        const Vec shift(g + 1, g + 1 + d);
        const Vec lo = sub(shift, len[u]);
        const Vec hi = add(shift, len[v]);
        for (auto it = std::upper_bound(sorted_ys.begin(), sorted_ys.end(), lo, less);
             it != sorted_ys.end() && less(*it, hi); ++it) {
            buf[0] = g[0];
            for (std::size_t k = 0; k < d; ++k) buf[k + 1] = shift[k] - (*it)[k];
            found.insert(buf.data());
        }
    }
    std::vector<OverlapClass> out;
    for (std::size_t slot = 0; slot < found.capacity(); ++slot) {
        if (!found.used(slot)) continue;
        const std::int64_t* c = found.key(slot);
        out.push_back(OverlapClass{static_cast<Letter>(c[0] / m), static_cast<Letter>(c[0] % m),
                                   frame.unscale(Vec(c + 1, c + 1 + d))});
    }
    return out;
}

std::vector<OverlapClass> sorted(std::vector<OverlapClass> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<OverlapClass> seed_overlaps(const SuspensionTiling& t, const Patch& patch,
                                        const std::vector<AlgebraicReal>& ys) {
    if (auto fast = seed_scaled(t, patch, &ys)) return sorted(std::move(*fast));
    return sorted(seed_generic(t, patch, ys));
}

std::vector<OverlapClass> seed_overlaps(const SuspensionTiling& t, const Patch& patch) {
    if (auto fast = seed_scaled(t, patch, nullptr)) return sorted(std::move(*fast));
    return sorted(seed_generic(t, patch, return_vectors(patch)));
}

std::vector<int> OverlapGraph::coincidences() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k].is_coincidence()) out.push_back(static_cast<int>(k));
    return out;
}

std::optional<int> OverlapGraph::find(const OverlapClass& c) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
    if (it == vertices.end() || !(*it == c)) return std::nullopt;
    return static_cast<int>(it - vertices.begin());
}

OverlapGraph build_graph(const SuspensionTiling& t, const std::vector<OverlapClass>& seeds, int level,
                         std::size_t cap) {
    if (seeds.empty()) throw StructuralError("build_graph: no seed classes");
    if (level < 1) throw PreconditionError("build_graph: inflation level must be >= 1");
    const Substitution level_power = level == 1 ? t.substitution() : power(t.substitution(), level);

    std::map<OverlapClass, int, ClassKeyLess> id;
    std::vector<OverlapClass> found;
    std::vector<Edge> edges;
    std::deque<int> todo;
    auto intern = [&](const OverlapClass& c) {
        auto [it, fresh] = id.emplace(c, static_cast<int>(found.size()));
        if (fresh) {
            if (found.size() >= cap) throw CapExceeded("overlap-classes", cap, "overlap graph exceeds the class cap");
            found.push_back(c);
            todo.push_back(it->second);
        }
        return it->second;
    };
    for (const OverlapClass& s : seeds) {
        if (!is_valid_class(t, s)) throw PreconditionError("seed " + s.label() + " is not an overlap");
        intern(s);
    }
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop_front();
        const OverlapClass c = found[v];
        for (const auto& [child, mult] : inflate_class(t, level_power, level, c))
            edges.push_back({v, intern(child), mult});
    }

    // Relabel in value order so output does not depend on discovery order.
    std::vector<int> order(found.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return found[a] < found[b]; });
    std::vector<int> rank(found.size());
    OverlapGraph g;
    g.level = level;
    for (std::size_t k = 0; k < order.size(); ++k) {
        rank[order[k]] = static_cast<int>(k);
        g.vertices.push_back(found[order[k]]);
    }
    g.graph = Digraph(static_cast<int>(found.size()));
    for (const Edge& e : edges) g.graph.add_edge(rank[e.from], rank[e.to], e.mult);
    return g;
}

OverlapVerdict overlap_coincidence(const OverlapGraph& g) {
    if (g.vertices.empty()) throw StructuralError("overlap_coincidence: empty graph");
    OverlapVerdict out;
    out.distance = distance_to(g.graph, g.coincidences());
    for (std::size_t k = 0; k < out.distance.size(); ++k)
        if (out.distance[k] < 0) out.stuck.push_back(static_cast<int>(k));
    out.holds = out.stuck.empty();
    return out;
}

std::vector<SccReport> expansive_sccs(const SuspensionTiling& t, const OverlapGraph& g) {
    const auto parts = scc(g.graph);
    const auto reach = reachable_to(g.graph, g.coincidences());
    const AlgebraicReal expansion = pow(t.beta(), g.level);
    std::vector<SccReport> out;
    for (const auto& members : parts.components) {
        if (!is_nontrivial(g.graph, members)) continue;
        if (std::any_of(members.begin(), members.end(), [&](int v) { return g.vertices[v].is_coincidence(); }))
            continue;
        SccReport r;
        r.members = members;
        r.matrix = adjacency(induced(g.graph, members));
        r.reaches_coincidence = reach[members.front()];
        r.perron_is_expansion = perron_equals(r.matrix, expansion);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const SccReport& a, const SccReport& b) { return a.members < b.members; });
    return out;
}

OverlapAnalysis analyze_overlaps_at(const SuspensionTiling& t, const AlgebraicReal& radius, int level,
                                    std::size_t cap) {
    const Patch patch = t.central_patch(radius);
    const auto seeds = seed_overlaps(t, patch);
    OverlapAnalysis a{radius, 0, build_graph(t, seeds, level, cap), {}};
    a.verdict = overlap_coincidence(a.graph);
    return a;
}

OverlapAnalysis analyze_overlaps(const SuspensionTiling& t, std::optional<AlgebraicReal> radius, int level,
                                 std::size_t cap) {
    AlgebraicReal r = radius ? *radius : t.max_length() * Rational(8);
    if (r.sign() <= 0) throw PreconditionError("seeding radius must be positive");
    std::deque<OverlapAnalysis> window;
    for (int k = 0; k <= kMaxRadiusDoublings + 2; ++k) {
        window.push_back(analyze_overlaps_at(t, r, level, cap));
        window.back().doublings = k;
        if (window.size() > 3) window.pop_front();
        if (window.size() == 3 && window[0].graph.vertices == window[1].graph.vertices &&
            window[1].graph.vertices == window[2].graph.vertices)
            return window.front();
        r = r * Rational(2);
    }
    throw CapExceeded("radius-doublings", kMaxRadiusDoublings, "overlap vertex set did not stabilise");
}

void write_dot(std::ostream& os, const OverlapGraph& g, const OverlapVerdict& v) {
    os << "digraph overlap {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        os << "  v" << k << " [label=\"" << g.vertices[k].label() << "\"";
        if (g.vertices[k].is_coincidence()) os << ", shape=doublecircle";
        if (v.distance.at(k) < 0) os << ", color=red, fontcolor=red";
        os << "];\n";
    }
    for (const Edge& e : g.graph.edges()) {
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.mult << "\"";
        if (v.distance.at(e.from) < 0 && v.distance.at(e.to) < 0) os << ", color=red";
        os << "];\n";
    }
    os << "}\n";
}

}  // namespace pisot
