#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sew/lattice.hpp"

using namespace sew;

TEST_CASE("square2d euler count on the torus") {
    auto c = square2d(3, 3);
    CHECK(c.vertices.size() == 9);
    CHECK(c.edges.size() == 18);
    CHECK(c.faces.size() == 9);
    CHECK_THROWS(square2d(1, 3));
}

TEST_CASE("triangular stack: coloring and branching") {
    auto c = triangular_stack(3, 2);
    CHECK(c.vertices.size() == 18);
    // every in-plane edge points from color k to color k+1 mod 3
    for (auto& e : c.edges) {
        if (e.tag != "t") continue;
        int cs = c.vertices[e.src].color, ct = c.vertices[e.tgt].color;
        CHECK((cs + 1) % 3 == ct);
    }
    // vertical edges point -z
    for (auto& e : c.edges) {
        if (e.tag != "v") continue;
        CHECK(c.vertices[e.src].xyz[2] == c.vertices[e.tgt].xyz[2] + 1);
    }
    // each layer carries 2 L^2 triangles
    int up = 0, dn = 0;
    for (auto& f : c.faces) {
        if (f.tag == "up") ++up;
        if (f.tag == "down") ++dn;
    }
    CHECK(up + dn == 2 * 9 * 2);
}

TEST_CASE("cubic lattice with wall plane") {
    auto c = cubic3d(2, 2, 1, 1);
    CHECK(c.wall_plane == 0);
    // 3 layers of 4 vertices
    CHECK(c.vertices.size() == 12);
    c.validate();
}

TEST_CASE("folding is an involution on edge labels") {
    auto f = folded_square2d(3, 3);
    for (size_t e = 0; e < f.edge_pairs.size(); ++e) {
        auto [front, back] = f.edge_pairs[e];
        CHECK(front / 2 == (int)e);
        CHECK(back / 2 == (int)e);
        CHECK(front != back);
    }
}

TEST_CASE("ribbon composition") {
    Ribbon r1, r2;
    r1.start = {0, 0};
    r1.end = {1, 1};
    r1.steps = {{false, 0, +1}};
    r2.start = {1, 1};
    r2.end = {2, 2};
    r2.steps = {{true, 1, +1}};
    auto r = compose_ribbons(r1, r2);
    CHECK(r.steps.size() == 2);
    CHECK(r.start.vertex == 0);
    CHECK(r.end.vertex == 2);
    Ribbon empty;
    auto r3 = compose_ribbons(r1, empty);
    CHECK(r3.steps.size() == 1);
    Ribbon bad;
    bad.start = {5, 5};
    bad.steps = {{false, 2, +1}};
    CHECK_THROWS(compose_ribbons(r1, bad));
}
