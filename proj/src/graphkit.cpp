#include "pisot/graphkit.hpp"

#include <algorithm>
#include <deque>

namespace pisot {

void Digraph::check(int v) const {
    if (v < 0 || v >= size()) throw PreconditionError("vertex index out of range: " + std::to_string(v));
}

int Digraph::add_vertex() {
    out_.emplace_back();
    return size() - 1;
}

void Digraph::add_edge(int from, int to, std::int64_t mult) {
    check(from);
    check(to);
    if (mult < 1) throw PreconditionError("edge multiplicity must be positive");
    auto& list = out_[static_cast<std::size_t>(from)];
    auto it = std::lower_bound(list.begin(), list.end(), to, [](const Edge& e, int t) { return e.to < t; });
    if (it != list.end() && it->to == to)
        it->mult += mult;
    else
        list.insert(it, Edge{from, to, mult});
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> all;
    for (const auto& list : out_) all.insert(all.end(), list.begin(), list.end());
    return all;
}

std::int64_t Digraph::multiplicity(int from, int to) const {
    check(to);
    for (const Edge& e : out(from))
        if (e.to == to) return e.mult;
    return 0;
}

bool Digraph::has_edge(int from, int to) const { return multiplicity(from, to) > 0; }

SccResult scc(const Digraph& g) {
    const int n = g.size();
    SccResult r;
    r.component.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0;

    // Iterative Tarjan: frames hold (vertex, next out-edge position).
    std::vector<std::pair<int, std::size_t>> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& out = g.out(v);
            if (pos < out.size()) {
                const int w = out[pos++].to;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<int> members;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    r.component[w] = static_cast<int>(r.components.size());
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                r.components.push_back(std::move(members));
            }
            const int finished = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
        }
    }

    r.condensation = Digraph(static_cast<int>(r.components.size()));
    for (const Edge& e : g.edges()) {
        const int a = r.component[e.from], b = r.component[e.to];
        if (a != b) r.condensation.add_edge(a, b, e.mult);
    }
    return r;
}

bool is_strongly_connected(const Digraph& g) { return g.size() > 0 && scc(g).components.size() == 1; }

bool is_nontrivial(const Digraph& g, const std::vector<int>& members) {
    return members.size() > 1 || (members.size() == 1 && g.has_edge(members[0], members[0]));
}

namespace {

std::vector<std::vector<int>> reversed(const Digraph& g) {
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(g.size()));
    for (const Edge& e : g.edges()) rev[e.to].push_back(e.from);
    return rev;
}

}  // namespace

std::vector<int> distance_to(const Digraph& g, const std::vector<int>& targets) {
    const auto rev = reversed(g);
    std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
    std::deque<int> todo;
    for (int t : targets)
        if (dist.at(t) < 0) {
            dist[t] = 0;
            todo.push_back(t);
        }
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop_front();
        for (int u : rev[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                todo.push_back(u);
            }
    }
    return dist;
}

std::vector<bool> reachable_to(const Digraph& g, const std::vector<int>& targets) {
    const auto dist = distance_to(g, targets);
    std::vector<bool> out(dist.size());
    for (std::size_t v = 0; v < dist.size(); ++v) out[v] = dist[v] >= 0;
    return out;
}

std::vector<bool> reachable_from(const Digraph& g, const std::vector<int>& sources) {
    std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
    std::vector<int> todo;
    for (int s : sources)
        if (!seen.at(s)) {
            seen[s] = true;
            todo.push_back(s);
        }
    while (!todo.empty()) {
        const int v = todo.back();
        todo.pop_back();
        for (const Edge& e : g.out(v))
            if (!seen[e.to]) {
                seen[e.to] = true;
                todo.push_back(e.to);
            }
    }
    return seen;
}

Digraph induced(const Digraph& g, const std::vector<int>& members) {
    std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t k = 0; k < members.size(); ++k) local.at(members[k]) = static_cast<int>(k);
    Digraph h(static_cast<int>(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k)
        for (const Edge& e : g.out(members[k]))
            if (local[e.to] >= 0) h.add_edge(static_cast<int>(k), local[e.to], e.mult);
    return h;
}

IntMatrix adjacency(const Digraph& g) {
    IntMatrix a = IntMatrix::Zero(g.size(), g.size());
    for (const Edge& e : g.edges()) a(e.from, e.to) = BigInt(e.mult);
    return a;
}

Cycle canonical_cycle(Cycle c) {
    if (c.empty()) return c;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    return c;
}

Digraph cycle_extension(const Digraph& g, const std::vector<Cycle>& cycles) {
    if (!is_strongly_connected(g)) throw PreconditionError("cycle_extension: graph is not strongly connected");
    if (cycles.empty()) throw PreconditionError("cycle_extension: no cycles given");
    const int n = g.size();
    std::vector<int> next(n, -1);
    for (const Cycle& c : cycles) {
        if (c.empty()) throw PreconditionError("cycle_extension: empty cycle");
        for (std::size_t k = 0; k < c.size(); ++k) {
            const int v = c[k], w = c[(k + 1) % c.size()];
            if (v < 0 || v >= n) throw PreconditionError("cycle_extension: vertex out of range");
            if (next[v] >= 0) throw PreconditionError("cycle_extension: cycles are not vertex-disjoint");
            if (!g.has_edge(v, w)) throw PreconditionError("cycle_extension: cycle edge missing from graph");
            next[v] = w;
        }
    }
    Digraph h(n);
    for (int v = 0; v < n; ++v)
        if (next[v] >= 0) h.add_edge(v, next[v], g.multiplicity(v, next[v]));
    // Strong connectivity guarantees some outside vertex has an edge into
    // the attached set until every vertex is attached.
    for (;;) {
        int attach = -1;
        for (int v = 0; v < n && attach < 0; ++v) {
            if (next[v] >= 0) continue;
            for (const Edge& e : g.out(v))
                if (next[e.to] >= 0) {
                    attach = v;
                    next[v] = e.to;
                    h.add_edge(v, e.to, e.mult);
                    break;
                }
        }
        if (attach < 0) break;
    }
    return h;
}

std::vector<Cycle> functional_cycles(const Digraph& g) {
    const int n = g.size();
    for (int v = 0; v < n; ++v)
        if (g.out(v).size() != 1) throw PreconditionError("functional_cycles: out-degree is not one");
    std::vector<int> state(n, 0);  // 0 new, 1 on current walk, 2 done
    std::vector<Cycle> out;
    for (int s = 0; s < n; ++s) {
        std::vector<int> walk;
        int v = s;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = g.out(v).front().to;
        }
        if (state[v] == 1) {
            auto it = std::find(walk.begin(), walk.end(), v);
            out.push_back(canonical_cycle(Cycle(it, walk.end())));
        }
        for (int w : walk) state[w] = 2;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool perron_equals(const IntMatrix& m, const AlgebraicReal& target) {
    if (m.rows() != m.cols()) throw PreconditionError("perron_equals: matrix is not square");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) < 0) throw PreconditionError("perron_equals: negative entry");
    const IntPoly chi = charpoly(m);
    AlgebraicReal value = AlgebraicReal::zero(target.field());
    for (int k = chi.degree(); k >= 0; --k) value = value * target + Rational(chi.coeff(k));
    if (!value.is_zero()) return false;
    // The Perron root is the largest real root; target is a root, so it is
    // the Perron root iff it lies in the isolating interval of the largest.
    const auto [lo, hi] = isolate_largest_real_root(cast<Rational>(chi));
    return target > AlgebraicReal::rational(target.field(), lo) && target <= AlgebraicReal::rational(target.field(), hi);
}

}  // namespace pisot
