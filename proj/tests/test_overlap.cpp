#include <sstream>

#include "doctest.h"
#include "support.hpp"

using namespace pisot;
using support::cls;
using support::sub;

namespace {

using Row = std::tuple<int, int, std::vector<std::string>>;

// Class lists produced by tests/oracle_scripts/overlap_classes.py, which walks
// a long window of the fixed point in 80-digit arithmetic.
const std::map<std::string, std::pair<std::vector<std::string>, std::vector<Row>>>& brute_force() {
    static const std::map<std::string, std::pair<std::vector<std::string>, std::vector<Row>>> m = {
        {"fibonacci",
         {{"12", "1"},
          {{1, 1, {"-1", "0"}},
           {1, 1, {"1", "-1"}},
           {1, 1, {"0", "0"}},
           {1, 1, {"-1", "1"}},
           {1, 1, {"1", "0"}},
           {1, 2, {"0", "0"}},
           {1, 2, {"-1", "1"}},
           {2, 1, {"1", "-1"}},
           {2, 1, {"0", "0"}},
           {2, 2, {"0", "0"}}}}},
        {"thue_morse", {{"12", "21"}, {{1, 1, {"0"}}, {1, 2, {"0"}}, {2, 1, {"0"}}, {2, 2, {"0"}}}}},
        {"period_doubling", {{"12", "11"}, {{1, 1, {"0"}}, {1, 2, {"0"}}, {2, 1, {"0"}}, {2, 2, {"0"}}}}},
        {"s112_12",
         {{"112", "12"},
          {{1, 1, {"-1", "0"}},
           {1, 1, {"2", "-1"}},
           {1, 1, {"0", "0"}},
           {1, 1, {"-2", "1"}},
           {1, 1, {"1", "0"}},
           {1, 2, {"0", "0"}},
           {1, 2, {"-2", "1"}},
           {2, 1, {"2", "-1"}},
           {2, 1, {"0", "0"}},
           {2, 2, {"0", "0"}}}}},
        {"s112_221", {{"112", "221"}, {{1, 1, {"0"}}, {1, 2, {"0"}}, {2, 1, {"0"}}, {2, 2, {"0"}}}}},
    };
    return m;
}

}  // namespace

TEST_CASE("closed vertex sets match the brute-force enumeration") {
    for (const auto& [name, entry] : brute_force()) {
        CAPTURE(name);
        const SuspensionTiling t(sub(entry.first));
        const auto a = analyze_overlaps(t);
        std::vector<OverlapClass> expect;
        for (const auto& [u, v, s] : entry.second) expect.push_back(cls(t.field(), u, v, s));
        CHECK(a.graph.vertices == expect);
    }
}

TEST_CASE("class validity and labels") {
    const SuspensionTiling t(sub({"12", "1"}));
    const auto f = t.field();
    CHECK(is_valid_class(t, cls(f, 1, 2, {"0"})));
    CHECK(is_valid_class(t, cls(f, 1, 1, {"-1", "1"})));
    // tile 2 has length 1 so V at -1 only touches U
    CHECK_FALSE(is_valid_class(t, cls(f, 1, 2, {"-1"})));
    CHECK(cls(f, 1, 1, {"-1", "1"}).label() == "(1,1,b - 1)");
    CHECK(cls(f, 2, 2, {"0"}).is_coincidence());
    CHECK_FALSE(cls(f, 1, 2, {"0"}).is_coincidence());
}

TEST_CASE("inflation of a class") {
    const SuspensionTiling t(sub({"12", "21"}));
    const auto f = t.field();
    const auto out = inflate_class(t, cls(f, 1, 2, {"0"}));
    // [1 2] against [2 1]
    REQUIRE(out.size() == 2);
    CHECK(out[0].first == cls(f, 1, 2, {"0"}));
    CHECK(out[1].first == cls(f, 2, 1, {"0"}));
    CHECK(out[0].second == 1);
    const auto same = inflate_class(t, cls(f, 1, 1, {"0"}));
    REQUIRE(same.size() == 2);
    CHECK(same[0].first.is_coincidence());
}

TEST_CASE("Fibonacci overlap coincidence") {
    const SuspensionTiling t(sub({"12", "1"}));
    const auto a = analyze_overlaps(t);
    CHECK(a.verdict.holds);
    CHECK(a.verdict.stuck.empty());
    CHECK(a.graph.coincidences().size() == 2);
    for (int d : a.verdict.distance) CHECK(d >= 0);
    for (const auto& c : expansive_sccs(t, a.graph)) CHECK(c.reaches_coincidence);
}

TEST_CASE("Thue-Morse certificate") {
    const SuspensionTiling t(sub({"12", "21"}));
    const auto f = t.field();
    const auto a = analyze_overlaps(t);
    CHECK_FALSE(a.verdict.holds);
    REQUIRE(a.verdict.stuck.size() == 2);
    CHECK(a.graph.vertices[a.verdict.stuck[0]] == cls(f, 1, 2, {"0"}));
    CHECK(a.graph.vertices[a.verdict.stuck[1]] == cls(f, 2, 1, {"0"}));
    CHECK(reachable_to(a.graph.graph, a.graph.coincidences()) == std::vector<bool>{true, false, false, true});
    const auto sccs = expansive_sccs(t, a.graph);
    REQUIRE(sccs.size() == 1);
    CHECK(sccs[0].members == a.verdict.stuck);
    IntMatrix ones(2, 2);
    ones << 1, 1, 1, 1;
    CHECK(sccs[0].matrix == ones);
    CHECK(sccs[0].perron_is_expansion);
    CHECK_FALSE(sccs[0].reaches_coincidence);
}

TEST_CASE("DOT output is deterministic") {
    const SuspensionTiling t(sub({"12", "21"}));
    std::ostringstream a, b;
    const auto x = analyze_overlaps(t);
    write_dot(a, x.graph, x.verdict);
    const auto y = analyze_overlaps(t);
    write_dot(b, y.graph, y.verdict);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("digraph overlap {", 0) == 0);
    CHECK(a.str().find("v0 [label=\"(1,1,0)\", shape=doublecircle];") != std::string::npos);
    CHECK(a.str().find("v1 -> v2 [label=\"1\", color=red];") != std::string::npos);
}

TEST_CASE("caps") {
    const SuspensionTiling t(sub({"12", "13", "1"}));
    try {
        analyze_overlaps(t, std::nullopt, 1, 20);
        FAIL("cap not reported");
    } catch (const CapExceeded& e) {
        CHECK(e.cap_name() == "overlap-classes");
        CHECK(e.cap_value() == 20);
    }
}

TEST_CASE("radius stability on the small corpus") {
    for (const auto& [name, entry] : brute_force()) {
        CAPTURE(name);
        const SuspensionTiling t(sub(entry.first));
        const auto a = analyze_overlaps(t);
        const auto b = analyze_overlaps_at(t, a.radius * Rational(4));
        CHECK(a.graph.vertices == b.graph.vertices);
        CHECK(a.verdict.holds == b.verdict.holds);
    }
}
