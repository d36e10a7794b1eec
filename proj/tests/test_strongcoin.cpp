#include "doctest.h"
#include "support.hpp"

using namespace pisot;
using support::cls;
using support::el;
using support::sub;

namespace {

OverlapGraph synthetic(const SuspensionTiling& t, int n, const std::vector<std::pair<int, int>>& edges) {
    OverlapGraph g;
    for (int k = 0; k < n; ++k) g.vertices.push_back(cls(t.field(), 1, 2, {std::to_string(k) + "/" + std::to_string(n)}));
    g.graph = Digraph(n);
    for (auto [a, b] : edges) g.graph.add_edge(a, b);
    return g;
}

}  // namespace

TEST_CASE("group of return vectors") {
    const SuspensionTiling fib(sub({"12", "1"}));
    const auto a = analyze_overlaps(fib);
    const GroupG g(fib, a.radius);
    CHECK(g.basis() == std::vector<AlgebraicReal>{el(fib.field(), {"1"}), el(fib.field(), {"0", "1"})});
    CHECK(g.membership(el(fib.field(), {"1/2"})) == std::nullopt);
    CHECK(g.membership(fib.beta().inverse()) == 0);
    for (const auto& y : return_vectors(fib.central_patch(a.radius))) CHECK(g.membership(y) == 0);

    const SuspensionTiling tm(sub({"12", "21"}));
    const GroupG h(tm, analyze_overlaps(tm).radius);
    CHECK(h.membership(tm.rational(Rational(1, 2))) == 1);
    CHECK(h.membership(tm.rational(Rational(1, 3))) == std::nullopt);
    CHECK_THROWS_AS(GroupG(tm, tm.rational(4), -1), PreconditionError);
}

TEST_CASE("tile map enumeration") {
    const SuspensionTiling fib(sub({"12", "1"}));
    CHECK(count_tile_maps(fib, 1) == 2);
    CHECK(count_tile_maps(fib, 2) == 6);
    std::vector<std::vector<int>> seen;
    enumerate_tile_maps(fib, 1, [&](const TileMap& m) { seen.push_back(m.choice); });
    CHECK(seen == std::vector<std::vector<int>>{{0, 0}, {1, 0}});

    const SuspensionTiling tm(sub({"12", "21"}));
    CHECK(count_tile_maps(tm, 2) == 16);
    CHECK_THROWS_AS(count_tile_maps(tm, 10, 100), CapExceeded);
    CHECK_THROWS_AS(count_tile_maps(tm, 0), PreconditionError);
}

TEST_CASE("Fibonacci multiple strong coincidence") {
    const SuspensionTiling t(sub({"12", "1"}));
    const auto a = analyze_overlaps(t);
    CHECK(compute_level_n(a.graph) == 1);
    const auto r = multiple_strong_coincidence(t, GroupG(t, a.radius), 1);
    CHECK(r.holds);
    CHECK(r.maps_total == 2);
    CHECK(r.maps_tested == 2);
    CHECK_FALSE(r.vacuous);
    REQUIRE(r.maps.size() == 2);
    CHECK(r.maps[0].c == std::vector<AlgebraicReal>{t.zero(), t.zero()});
    CHECK(r.maps[1].c == std::vector<AlgebraicReal>{t.beta(), t.rational(1)});
    REQUIRE(r.maps[0].report);
    REQUIRE(r.maps[1].report);
    CHECK(r.maps[0].report->pairs[1].level == 1);
    CHECK(r.maps[1].report->pairs[1].level == 3);
    for (const auto& m : r.maps) CHECK(m.report->holds());
}

TEST_CASE("Thue-Morse multiple strong coincidence fails") {
    const SuspensionTiling t(sub({"12", "21"}));
    const auto f = t.field();
    const auto a = analyze_overlaps(t);
    const int n = compute_level_n(a.graph);
    // both stuck classes carry self-loops
    CHECK(n == 1);
    const auto r = multiple_strong_coincidence(t, GroupG(t, a.radius), n);
    CHECK_FALSE(r.holds);
    CHECK(r.maps_tested == 4);
    REQUIRE(r.first_failure);
    CHECK(*r.first_failure == 0);
    const auto& p = r.maps[0].report->pairs[1];
    CHECK(p.status == PairStatus::Exhausted);
    CHECK(p.exhausted == std::vector<OverlapClass>{cls(f, 1, 2, {"0"}), cls(f, 2, 1, {"0"})});
    CHECK(r.maps[1].c == std::vector<AlgebraicReal>{t.zero(), t.rational(Rational(1, 2))});
    CHECK(r.maps[1].report->holds());
    CHECK(r.maps[1].report->pairs[1].level == 1);
    CHECK_FALSE(r.maps[3].report->holds());
}

TEST_CASE("Thue-Morse witness") {
    const SuspensionTiling t(sub({"12", "21"}));
    const auto a = analyze_overlaps(t);
    const GroupG g(t, a.radius);
    const auto comps = stuck_components(a.graph);
    REQUIRE(comps.size() == 1);
    const auto w = extract_witness(t, a.graph, comps[0], compute_level_n(a.graph), g);
    CHECK(w.overlap == cls(t.field(), 1, 2, {"0"}));
    CHECK(w.failing_i == 0);
    CHECK(w.failing_j == 1);
    CHECK(w.control_points.c == std::vector<AlgebraicReal>{t.zero(), t.zero()});
    CHECK(admissible(t, w.control_points.c));
    CHECK(in_group(g, w.control_points.c));
    CHECK(strong_pair(t, w.control_points.c, 0, 1).status == PairStatus::Exhausted);

    OverlapGraph rod = a.graph;
    CHECK_THROWS_WITH_AS(extract_witness(t, rod, {0}, 1, g), doctest::Contains("rod-hypothesis"), StructuralError);
}

TEST_CASE("level n from closed-walk structure") {
    const SuspensionTiling t(sub({"12", "21"}));
    CHECK(compute_level_n(synthetic(t, 2, {{0, 1}, {1, 0}})) == 2);
    CHECK(compute_level_n(synthetic(t, 2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}})) == 1);
    CHECK(compute_level_n(synthetic(t, 5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}})) == 6);
    CHECK(compute_level_n(synthetic(t, 3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}})) == 3);
    // every vertex reaches a coincidence
    OverlapGraph g = synthetic(t, 2, {{0, 1}, {1, 0}, {0, 0}});
    g.vertices[0] = cls(t.field(), 1, 1, {"0"});
    CHECK(compute_level_n(g) == 1);
}

TEST_CASE("strong pair preconditions") {
    const SuspensionTiling t(sub({"12", "21"}));
    CHECK_THROWS_AS(strong_pair(t, {t.zero(), t.rational(1)}, 0, 1), PreconditionError);
    const auto bad = solve_control_points(t, make_tile_map(t, 1, {0, 0}));
    ControlPoints shifted = bad;
    shifted.c[1] = t.rational(1);
    CHECK_THROWS_AS(strong_coincidence(t, shifted), PreconditionError);
    CHECK(strong_pair(t, bad.c, 1, 1).level == 0);
}

TEST_CASE("period doubling filters") {
    const SuspensionTiling t(sub({"12", "11"}));
    const auto a = analyze_overlaps(t);
    const auto r = multiple_strong_coincidence(t, GroupG(t, a.radius), compute_level_n(a.graph));
    CHECK(r.holds);
    CHECK(r.maps_total == 4);
    CHECK(r.maps_tested == 3);
}
