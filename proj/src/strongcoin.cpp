#include "pisot/strongcoin.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace pisot {

namespace {

using IntRow = std::vector<BigInt>;

// Row echelon (Hermite) form of an integer row set; zero rows dropped.
std::vector<IntRow> hermite(std::vector<IntRow> rows, std::size_t width) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t k = r; k < rows.size(); ++k)
                if (rows[k][col] != 0 && (best == rows.size() || mp::abs(rows[k][col]) < mp::abs(rows[best][col])))
                    best = k;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t k = r + 1; k < rows.size(); ++k) {
                if (rows[k][col] == 0) continue;
                const BigInt q = rows[k][col] / rows[r][col];
                for (std::size_t c = col; c < width; ++c) rows[k][c] -= q * rows[r][c];
                if (rows[k][col] != 0) done = false;
            }
            if (done) break;
        }
        if (r >= rows.size() || rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t k = 0; k < r; ++k) {
            BigInt q = rows[k][col] / rows[r][col];
            if (rows[k][col] - q * rows[r][col] < 0) q -= 1;
            if (q != 0)
                for (std::size_t c = col; c < width; ++c) rows[k][c] -= q * rows[r][c];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::optional<IntRow> scaled_row(const AlgebraicReal& x, const BigInt& den) {
    IntRow row;
    for (Eigen::Index k = 0; k < x.coords().size(); ++k) {
        const Rational q = x.coords()(k) * Rational(den);
        if (mp::denominator(q) != 1) return std::nullopt;
        row.push_back(mp::numerator(q));
    }
    return row;
}

}  // namespace

GroupG::GroupG(const SuspensionTiling& t, const AlgebraicReal& patch_radius, int k_max)
    : field_(t.field()), beta_(t.beta()), k_max_(k_max) {
    if (k_max < 0) throw PreconditionError("k_max must be non-negative");
    const int m = t.alphabet_size();
    AlgebraicReal radius = patch_radius;
    Patch patch = t.central_patch(radius);
    auto colours_present = [&] {
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        for (const Tile& x : patch.tiles) seen[x.color] = true;
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    while (!colours_present()) {
        radius = radius * Rational(2);
        patch = t.central_patch(radius);
    }

    std::vector<AlgebraicReal> gens;
    reps_.assign(static_cast<std::size_t>(m), t.zero());
    std::vector<const Tile*> last(static_cast<std::size_t>(m), nullptr);
    for (const Tile& x : patch.tiles) {
        if (last[x.color])
            gens.push_back(x.pos - last[x.color]->pos);
        else
            reps_[x.color] = x.pos;
        last[x.color] = &x;
    }
    for (const auto& g : gens)
        for (Eigen::Index k = 0; k < g.coords().size(); ++k)
            den_ = mp::lcm(den_, BigInt(mp::denominator(g.coords()(k))));

    const std::size_t d = static_cast<std::size_t>(field_->degree());
    std::vector<IntRow> rows;
    for (const auto& g : gens) rows.push_back(*scaled_row(g, den_));
    rows = hermite(std::move(rows), d);
    auto to_matrix = [&](const std::vector<IntRow>& r) {
        IntMatrix out(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(d));
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < d; ++j) out(i, j) = r[i][j];
        return out;
    };
    hnf_ = to_matrix(rows);

    // Saturate: the lattice only grows and sits in Z^d, so this stops.
    for (bool grew = true; grew;) {
        grew = false;
        for (const AlgebraicReal& b : basis()) {
            const AlgebraicReal image = beta_ * b;
            if (in_lattice(image)) continue;
            rows.push_back(*scaled_row(image, den_));
            rows = hermite(std::move(rows), d);
            hnf_ = to_matrix(rows);
            grew = true;
            break;
        }
    }
}

std::vector<AlgebraicReal> GroupG::basis() const {
    std::vector<AlgebraicReal> out;
    for (Eigen::Index i = 0; i < hnf_.rows(); ++i) {
        Vector<Rational> c(hnf_.cols());
        for (Eigen::Index j = 0; j < hnf_.cols(); ++j) c(j) = Rational(hnf_(i, j), den_);
        out.emplace_back(field_, std::move(c));
    }
    return out;
}

bool GroupG::in_lattice(const AlgebraicReal& x) const {
    auto row = scaled_row(x, den_);
    if (!row) return false;
    IntRow& v = *row;
    for (Eigen::Index i = 0; i < hnf_.rows(); ++i) {
        Eigen::Index p = 0;
        while (hnf_(i, p) == 0) ++p;
        if (v[p] % hnf_(i, p) != 0) return false;
        const BigInt q = v[p] / hnf_(i, p);
        for (Eigen::Index c = p; c < hnf_.cols(); ++c) v[c] -= q * hnf_(i, c);
    }
    return std::all_of(v.begin(), v.end(), [](const BigInt& z) { return z == 0; });
}

std::optional<int> GroupG::membership(const AlgebraicReal& x) const {
    AlgebraicReal y = x;
    for (int k = 0; k <= k_max_; ++k) {
        if (in_lattice(y)) return k;
        y = beta_ * y;
    }
    return std::nullopt;
}

bool StrongCoincidenceReport::holds() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.status == PairStatus::Coincidence; });
}

PairReport strong_pair(const SuspensionTiling& t, const std::vector<AlgebraicReal>& c, Letter i, Letter j,
                       std::size_t cap_classes) {
    PairReport r{i, j, PairStatus::Coincidence, 0, {}};
    if (i == j) return r;
    const OverlapClass seed{i, j, c.at(i) - c.at(j)};
    if (!is_valid_class(t, seed)) throw PreconditionError("tiles " + std::to_string(i + 1) + " and " +
                                                          std::to_string(j + 1) + " do not overlap at their control points");
    std::map<OverlapClass, int, ClassKeyLess> depth{{seed, 0}};
    std::deque<OverlapClass> todo{seed};
    while (!todo.empty()) {
        const OverlapClass cls = todo.front();
        todo.pop_front();
        const int dist = depth.at(cls);
        for (const auto& [child, mult] : inflate_class(t, t.substitution(), 1, cls)) {
            if (!depth.emplace(child, dist + 1).second) continue;
            if (child.is_coincidence()) {
                r.level = dist + 1;
                return r;
            }
            if (depth.size() > cap_classes)
                throw CapExceeded("overlap-classes", cap_classes, "strong coincidence closure exceeds the class cap");
            todo.push_back(child);
        }
    }
    r.status = PairStatus::Exhausted;
    for (const auto& entry : depth) r.exhausted.push_back(entry.first);
    std::sort(r.exhausted.begin(), r.exhausted.end());
    return r;
}

StrongCoincidenceReport strong_coincidence(const SuspensionTiling& t, const ControlPoints& cp,
                                           std::size_t cap_classes) {
    if (!admissible(t, cp.c)) throw PreconditionError("strong_coincidence: control points are not admissible");
    StrongCoincidenceReport out{cp, false, {}};
    for (Letter i = 0; i < t.alphabet_size(); ++i)
        for (Letter j = i; j < t.alphabet_size(); ++j) out.pairs.push_back(strong_pair(t, cp.c, i, j, cap_classes));
    return out;
}

bool in_group(const GroupG& g, const std::vector<AlgebraicReal>& c) {
    const auto& x = g.representatives();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.contains((x[i] + c[i]) - (x[j] + c[j]))) return false;
    return true;
}

std::size_t count_tile_maps(const SuspensionTiling& t, int level, std::size_t cap) {
    if (level < 1) throw PreconditionError("tile maps need level >= 1");
    // Word lengths are column sums of M^level; count them without building words.
    const IntMatrix m = substitution_matrix(t.substitution());
    IntMatrix p = m;
    for (int k = 1; k < level; ++k) p = p * m;
    BigInt total(1);
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        total *= p.col(j).sum();
        if (total > cap) throw CapExceeded("tile-maps", cap, "level " + std::to_string(level) + " has " +
                                                                   (total > BigInt(cap) ? "more than " : "") +
                                                                   std::to_string(cap) + " tile maps");
    }
    return total.convert_to<std::size_t>();
}

void enumerate_tile_maps(const SuspensionTiling& t, int level, const std::function<void(const TileMap&)>& visit,
                         std::size_t cap) {
    count_tile_maps(t, level, cap);
    const Substitution lp = power(t.substitution(), level);
    const int m = t.alphabet_size();
    std::vector<int> choice(static_cast<std::size_t>(m), 0);
    for (;;) {
        visit(make_tile_map(t, lp, level, choice));
        int k = m - 1;
        while (k >= 0 && choice[k] + 1 == static_cast<int>(lp.rule(k).size())) choice[k--] = 0;
        if (k < 0) return;
        ++choice[k];
    }
}

MscResult multiple_strong_coincidence(const SuspensionTiling& t, const GroupG& g, int level, const MscOptions& opt) {
    MscResult out;
    out.level = level;
    out.holds = true;
    enumerate_tile_maps(
        t, level,
        [&](const TileMap& tm) {
            ++out.maps_total;
            MapSummary s;
            s.choice = tm.choice;
            const ControlPoints cp = solve_control_points(t, tm);
            s.c = cp.c;
            s.admissible = cp.admissible;
            s.in_group = s.admissible && in_group(g, cp.c);
            if (s.admissible && s.in_group) {
                ++out.maps_tested;
                s.report = strong_coincidence(t, cp, opt.cap_classes);
                s.report->in_group = true;
                if (!s.report->holds()) {
                    out.holds = false;
                    if (!out.first_failure) out.first_failure = out.maps.size();
                }
            }
            out.maps.push_back(std::move(s));
        },
        opt.cap_maps);
    out.vacuous = out.maps_tested == 0;
    return out;
}

namespace {

// gcd of level[u] + 1 - level[v] over edges, with breadth-first levels.
std::size_t period(const Digraph& g) {
    std::vector<long> level(static_cast<std::size_t>(g.size()), -1);
    std::deque<int> todo{0};
    level[0] = 0;
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop_front();
        for (const Edge& e : g.out(v))
            if (level[e.to] < 0) {
                level[e.to] = level[v] + 1;
                todo.push_back(e.to);
            }
    }
    long p = 0;
    for (const Edge& e : g.edges()) p = std::gcd(p, std::labs(level[e.from] + 1 - level[e.to]));
    return static_cast<std::size_t>(p);
}

}  // namespace

std::vector<std::vector<int>> stuck_components(const OverlapGraph& g) {
    const auto reach = reachable_to(g.graph, g.coincidences());
    std::vector<std::vector<int>> out;
    for (const auto& members : scc(g.graph).components)
        if (!reach[members.front()] && is_nontrivial(g.graph, members)) out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

int compute_level_n(const OverlapGraph& g) {
    const auto comps = stuck_components(g);
    if (comps.empty()) return 1;
    std::vector<Matrix<int>> base, cur;
    std::size_t largest = 0;
    for (const auto& c : comps) {
        const IntMatrix a = adjacency(induced(g.graph, c));
        base.push_back(a.unaryExpr([](const BigInt& x) { return x > 0 ? 1 : 0; }));
        largest = std::max(largest, c.size());
    }
    cur = base;
    // Closed-walk lengths through a vertex are eventually all multiples of
    // the component's period, after at most about s^2 steps.
    std::size_t periods = 1;
    for (const auto& c : comps) periods = std::lcm(periods, period(induced(g.graph, c)));
    const std::size_t limit = periods * (largest * largest + 2);
    for (std::size_t n = 1; n <= limit; ++n) {
        bool all = true;
        for (const auto& p : cur) all = all && (p.diagonal().array() > 0).all();
        if (all) return static_cast<int>(n);
        for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = (cur[k] * base[k]).cwiseMin(1);
    }
    throw StructuralError("compute_level_n: no common closed-walk length found");
}

Witness extract_witness(const SuspensionTiling& t, const OverlapGraph& g, const std::vector<int>& scc_members,
                        int level, const GroupG& group, std::size_t cap_classes) {
    const OverlapClass* pick = nullptr;
    for (int v : scc_members)
        if (g.vertices.at(v).u != g.vertices.at(v).v) {
            pick = &g.vertices[v];
            break;
        }
    if (!pick)
        throw StructuralError("rod-hypothesis violation: every class of the component has equal colours");
    const OverlapClass cls = *pick;
    const Substitution lp = power(t.substitution(), level);

    // A descendant at this level equivalent to the class itself.
    const Word& wu = lp.rule(cls.u);
    const Word& wv = lp.rule(cls.v);
    const auto pu = t.prefix_offsets(wu);
    auto pv = t.prefix_offsets(wv);
    const AlgebraicReal start = pow(t.beta(), level) * cls.shift;
    for (auto& x : pv) x += start;
    std::optional<std::pair<int, int>> found;
    for (std::size_t a = 0; a < wu.size() && !found; ++a) {
        if (wu[a] != cls.u) continue;
        for (std::size_t b = 0; b < wv.size(); ++b)
            if (wv[b] == cls.v && pv[b] - pu[a] == cls.shift) {
                found = std::pair{static_cast<int>(a), static_cast<int>(b)};
                break;
            }
    }
    if (!found)
        throw StructuralError("class " + cls.label() + " has no equivalent descendant at level " +
                              std::to_string(level));

    // Colour graph of sigma^level; the two chosen subtiles are self-loops.
    const int m = t.alphabet_size();
    Digraph colours(m);
    for (Letter i = 0; i < m; ++i)
        for (Letter j : lp.rule(i)) colours.add_edge(i, j);
    const Digraph tree = cycle_extension(colours, {{cls.u}, {cls.v}});

    std::vector<int> choice(static_cast<std::size_t>(m), 0);
    for (Letter i = 0; i < m; ++i) {
        if (i == cls.u || i == cls.v) continue;
        const Letter target = tree.out(i).front().to;
        const Word& w = lp.rule(i);
        choice[i] = static_cast<int>(std::find(w.begin(), w.end(), target) - w.begin());
    }
    choice[cls.u] = found->first;
    choice[cls.v] = found->second;

    Witness out{cls, solve_control_points(t, make_tile_map(t, lp, level, choice)), cls.u, cls.v, {}, false};
    if (!out.control_points.admissible) throw StructuralError("witness family is not admissible");
    out.in_group = in_group(group, out.control_points.c);
    if (!out.in_group) throw StructuralError("witness family is not in the group of return vectors");
    out.failing_pair = strong_pair(t, out.control_points.c, cls.u, cls.v, cap_classes);
    if (out.failing_pair.status != PairStatus::Exhausted)
        throw StructuralError("witness family does not fail strong coincidence");
    return out;
}

std::string to_string(PairStatus s) { return s == PairStatus::Coincidence ? "coincidence" : "exhausted"; }

}  // namespace pisot
