#include <numeric>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace pisot;

namespace {

Digraph from_edges(int n, const std::vector<std::pair<int, int>>& e) {
    Digraph g(n);
    for (auto [a, b] : e) g.add_edge(a, b);
    return g;
}

std::vector<int> successor_map(const Digraph& g) {
    std::vector<int> next(static_cast<std::size_t>(g.size()), -1);
    for (int v = 0; v < g.size(); ++v) {
        REQUIRE(g.out(v).size() == 1);
        next[v] = g.out(v)[0].to;
    }
    return next;
}

bool acyclic(const Digraph& g) {
    for (const auto& comp : scc(g).components)
        if (is_nontrivial(g, comp)) return false;
    return true;
}

}  // namespace

TEST_CASE("strongly connected components") {
    CHECK(scc(Digraph(1)).components.size() == 1);
    CHECK(scc(from_edges(2, {{0, 1}, {1, 0}})).components.size() == 1);
    const auto path = scc(from_edges(3, {{0, 1}, {1, 2}}));
    CHECK(path.components.size() == 3);
    CHECK(acyclic(path.condensation));
    const auto g = from_edges(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}, {3, 4}});
    const auto r = scc(g);
    CHECK(r.components.size() == 3);
    CHECK(r.component[0] == r.component[1]);
    CHECK(r.component[2] == r.component[3]);
    CHECK(acyclic(r.condensation));
    // sinks first
    CHECK(r.components[0] == std::vector<int>{4});
    CHECK(is_nontrivial(from_edges(1, {{0, 0}}), {0}));
    CHECK_FALSE(is_nontrivial(Digraph(1), {0}));
}

TEST_CASE("multiplicities merge") {
    Digraph g(2);
    g.add_edge(0, 1, 2);
    g.add_edge(0, 1, 3);
    CHECK(g.multiplicity(0, 1) == 5);
    CHECK(g.edges().size() == 1);
    CHECK_THROWS(g.add_edge(0, 2));
    CHECK_THROWS(g.add_edge(0, 1, 0));
}

TEST_CASE("reachability") {
    const auto g = from_edges(4, {{0, 1}, {1, 2}, {3, 3}});
    CHECK(reachable_to(g, {0, 1, 2, 3}) == std::vector<bool>{true, true, true, true});
    CHECK(reachable_to(g, {}) == std::vector<bool>{false, false, false, false});
    CHECK(reachable_to(g, {2}) == std::vector<bool>{true, true, true, false});
    CHECK(reachable_from(g, {1}) == std::vector<bool>{false, true, true, false});
    CHECK(distance_to(g, {2}) == std::vector<int>{2, 1, 0, -1});
}

TEST_CASE("cycle extension on small graphs") {
    const auto cyc = from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto same = cycle_extension(cyc, {{0, 1, 2}});
    CHECK(same.edges() == cyc.edges());

    const auto k3 = from_edges(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
    const auto h = cycle_extension(k3, {{0, 1}});
    CHECK(h.size() == 3);
    CHECK(h.out(2).size() == 1);
    CHECK(h.out(2)[0].to == 0);  // smallest target
    CHECK(oracle::functional_cycles(successor_map(h)) == std::set<std::vector<int>>{{0, 1}});

    CHECK_THROWS_AS(cycle_extension(from_edges(2, {{0, 1}}), {{0, 1}}), PreconditionError);
    CHECK_THROWS_AS(cycle_extension(k3, {}), PreconditionError);
    CHECK_THROWS_AS(cycle_extension(k3, {{0, 1}, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(cycle_extension(cyc, {{0, 2}}), PreconditionError);
}

TEST_CASE("cycle extension on random strongly connected graphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 12)(rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Digraph g(n);
        for (int k = 0; k < n; ++k) g.add_edge(perm[k], perm[(k + 1) % n]);
        for (int extra = 0; extra < n; ++extra) {
            const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
            const int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
            g.add_edge(a, b);
        }
        const std::vector<Cycle> cycles{canonical_cycle(perm)};
        const auto h = cycle_extension(g, cycles);
        CHECK(oracle::functional_cycles(successor_map(h)) == std::set<std::vector<int>>{cycles[0]});
        CHECK(functional_cycles(h) == cycles);
    }
}

TEST_CASE("Perron root comparison") {
    const auto gold = NumberField::from_largest_root(IntPoly({-1, -1, 1}));
    const auto two = NumberField::from_largest_root(IntPoly({-2, 1}));
    IntMatrix m1(1, 1);
    m1 << 2;
    CHECK(perron_equals(m1, AlgebraicReal::beta(two)));
    IntMatrix fib(2, 2);
    fib << 1, 1, 1, 0;
    CHECK(perron_equals(fib, AlgebraicReal::beta(gold)));
    IntMatrix one(1, 1);
    one << 1;
    CHECK_FALSE(perron_equals(one, AlgebraicReal::beta(gold)));
    // Perron root is beta^2
    IntMatrix big(2, 2);
    big << 2, 1, 1, 1;
    CHECK_FALSE(perron_equals(big, AlgebraicReal::beta(gold)));
}
