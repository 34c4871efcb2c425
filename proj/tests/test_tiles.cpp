#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pqca/tiles.hpp"

using namespace pqca;

TEST_CASE("tile ports satisfy the (+14,+14) displacement per port set") {
    for (TileKind k : {TileKind::identity, TileKind::hadamard, TileKind::phase,
                       TileKind::swap, TileKind::cphase}) {
        const Tile& t = tile(k);
        CHECK(t.latency == 24);
        // Exits as a set are the entries displaced by (+14,+14).
        std::vector<Position> want, got;
        for (const auto& e : t.entries) want.push_back({e.pos.x + 14, e.pos.y + 14});
        for (const auto& e : t.exits) got.push_back(e.pos);
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        CHECK(want == got);
        CHECK(t.wire_count() == ((k == TileKind::swap || k == TileKind::cphase) ? 2 : 1));
    }
}

TEST_CASE("identity tile") {
    GateMatrix m = extract_gate(TileKind::identity);
    CHECK(matrix_deviation(m, target_gate(TileKind::identity)) < 1e-12);
    CHECK(!tile(TileKind::identity).barriers.empty());
}

TEST_CASE("hadamard tile") {
    GateMatrix m = extract_gate(TileKind::hadamard);
    CHECK(matrix_deviation(m, target_gate(TileKind::hadamard)) < 1e-12);
}

TEST_CASE("phase tile") {
    const Tile& t = tile(TileKind::phase);
    REQUIRE(t.aux.has_value());
    CHECK(t.aux->state == Univ::sig1);
    GateMatrix m = extract_gate(TileKind::phase);
    CHECK(matrix_deviation(m, target_gate(TileKind::phase)) < 1e-12);
}

TEST_CASE("swap tile") {
    GateMatrix m = extract_gate(TileKind::swap);
    CHECK(matrix_deviation(m, target_gate(TileKind::swap)) < 1e-12);
}

TEST_CASE("cphase tile") {
    GateMatrix m = extract_gate(TileKind::cphase);
    CHECK(matrix_deviation(m, target_gate(TileKind::cphase)) < 1e-12);
}

TEST_CASE("shift tiles displace the wire by +-4 columns") {
    const Tile& r = tile(TileKind::shift_right);
    CHECK(r.exits[0].pos == Position{18, 14});
    CHECK(matrix_deviation(extract_gate(TileKind::shift_right), target_gate(TileKind::identity)) <
          1e-12);
    const Tile& l = tile(TileKind::shift_left);
    CHECK(l.exits[0].pos == Position{10, 14});
    CHECK(matrix_deviation(extract_gate(TileKind::shift_left), target_gate(TileKind::identity)) <
          1e-12);
}

TEST_CASE("stamp collision and merge") {
    const Tile& t = tile(TileKind::identity);
    BasisConfiguration c = stamp(t, {0, 0}, BasisConfiguration{});
    // Same barrier again merges.
    CHECK_NOTHROW(stamp(t, {0, 0}, c));
    // A signal on a barrier cell collides.
    BasisConfiguration bad;
    bad.set({t.barriers[0].x, t.barriers[0].y}, Univ::sig0);
    CHECK_THROWS_AS(stamp(t, {0, 0}, bad), CollisionError);
    // Disjoint stamps commute.
    BasisConfiguration ab = stamp(t, {100, 0}, stamp(t, {0, 0}, BasisConfiguration{}));
    BasisConfiguration ba = stamp(t, {0, 0}, stamp(t, {100, 0}, BasisConfiguration{}));
    CHECK(ab == ba);
}
