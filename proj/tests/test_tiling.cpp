#include "doctest.h"
#include "support.hpp"

using namespace pisot;
using support::el;
using support::sub;

TEST_CASE("gates on construction") {
    CHECK_NOTHROW(SuspensionTiling(sub({"12", "1"})));
    try {
        SuspensionTiling t(sub({"12", "111"}));
        FAIL("non-Pisot substitution accepted");
    } catch (const GateFailure& e) {
        CHECK(std::string(e.what()).find("Pisot gate failed") != std::string::npos);
    }
    CHECK_THROWS_AS(SuspensionTiling(sub({"1", "22"})), GateFailure);
}

TEST_CASE("Fibonacci central patch") {
    const SuspensionTiling t(sub({"12", "1"}));
    const auto f = t.field();
    const auto p = t.central_patch(t.rational(3));
    std::vector<std::pair<Letter, AlgebraicReal>> expect = {
        {0, el(f, {"-1", "-2"})}, {1, el(f, {"-1", "-1"})}, {0, el(f, {"0", "-1"})},
        {0, el(f, {"0"})},        {1, el(f, {"0", "1"})},   {0, el(f, {"1", "1"})},
    };
    REQUIRE(p.tiles.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
        CHECK(p.tiles[k].color == expect[k].first);
        CHECK(p.tiles[k].pos == expect[k].second);
    }
    CHECK(has_disjoint_interiors(t, p));
}

TEST_CASE("central patch covers the window and is legal") {
    for (const auto& e : support::corpus()) {
        const SuspensionTiling t(sub(e.rules));
        const auto r = t.max_length() * Rational(6);
        const auto p = t.central_patch(r);
        REQUIRE_FALSE(p.tiles.empty());
        CHECK(has_disjoint_interiors(t, p));
        CHECK(p.tiles.front().pos <= -r);
        const auto& last = p.tiles.back();
        CHECK(last.pos + t.length(last.color) >= r);
        // consecutive colour pairs are legal two-letter words
        const auto legal = legal_pairs(t.substitution());
        for (std::size_t k = 0; k + 1 < p.tiles.size(); ++k) {
            CHECK(p.tiles[k].pos + t.length(p.tiles[k].color) == p.tiles[k + 1].pos);
            const std::pair pr{p.tiles[k].color, p.tiles[k + 1].color};
            CHECK(std::find(legal.begin(), legal.end(), pr) != legal.end());
        }
    }
}

TEST_CASE("inflation scales support length by beta") {
    const SuspensionTiling t(sub({"12", "13", "1"}));
    Patch p{{Tile{0, t.zero()}}};
    for (int k = 0; k < 4; ++k) {
        const auto q = t.inflate_patch(p, 1);
        CHECK(support_length(t, q) == t.beta() * support_length(t, p));
        CHECK(has_disjoint_interiors(t, q));
        p = q;
    }
    CHECK_THROWS_AS(t.inflate_patch(p, 20, 100), CapExceeded);
}

TEST_CASE("return vectors") {
    const SuspensionTiling t(sub({"12", "21"}));
    Patch p;
    for (int k = 0; k < 4; ++k) p.tiles.push_back({k == 1 || k == 2 ? 1 : 0, t.rational(k)});
    const auto rv = return_vectors(p);
    std::vector<AlgebraicReal> expect;
    for (int k : {-3, -1, 0, 1, 3}) expect.push_back(t.rational(k));
    CHECK(rv == expect);
    CHECK(translate(p, t.rational(1)).tiles[0].pos == t.rational(1));
}

TEST_CASE("control points solve their linear system") {
    const SuspensionTiling fib(sub({"12", "1"}));
    const auto f = fib.field();
    const auto cp = solve_control_points(fib, make_tile_map(fib, 1, {1, 0}));
    REQUIRE(cp.c.size() == 2);
    CHECK(cp.c[0] == el(f, {"0", "1"}));
    CHECK(cp.c[1] == el(f, {"1"}));
    // the nested intersection of the right subtile: beta^2 / (beta^2 - 1)
    const auto b2 = fib.beta() * fib.beta();
    CHECK(cp.c[0] == b2 / (b2 - Rational(1)));
    CHECK(cp.admissible);

    const SuspensionTiling tm(sub({"12", "21"}));
    const auto half = solve_control_points(tm, make_tile_map(tm, 1, {0, 1}));
    CHECK(half.c[0] == tm.zero());
    CHECK(half.c[1] == tm.rational(Rational(1, 2)));
    CHECK(admissible(tm, half.c));
    CHECK_FALSE(admissible(tm, {tm.zero(), tm.rational(1)}));

    for (const auto& e : support::corpus()) {
        const SuspensionTiling t(sub(e.rules));
        for (int level = 1; level <= 2; ++level) {
            const auto sp = power(t.substitution(), level);
            const auto bn = pow(t.beta(), level);
            std::vector<int> choice(static_cast<std::size_t>(t.alphabet_size()), 0);
            for (int a = 0; a < t.alphabet_size(); ++a) choice[a] = static_cast<int>(sp.rule(a).size()) - 1;
            const auto c = solve_control_points(t, make_tile_map(t, level, choice));
            for (int a = 0; a < t.alphabet_size(); ++a)
                CHECK(bn * c.c[a] - c.c[c.tile_map.target[a]] - c.tile_map.offset[a] == t.zero());
        }
    }
}
